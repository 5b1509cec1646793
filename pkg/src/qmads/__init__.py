"""Exact verification of Cayley-Hamilton identities and companion-form
similarities for quantum matrix algebras (RTT, reflection equation,
modified reflection equation, U(gl(N))) and braided Yangians."""

from .report import TOOL_VERSION as __version__

__all__ = ["__version__"]
