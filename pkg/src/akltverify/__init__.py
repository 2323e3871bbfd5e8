"""Construction, analysis and simulation of verification protocols for AKLT states."""

__version__ = "0.1.0"
