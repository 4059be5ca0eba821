"""Two-reflection quantum walks and state transfer analysis"""

__version__ = "0.1.0"
