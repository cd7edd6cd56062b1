"""Limited packings and tuple domination in graphs."""

__version__ = '0.1.0'
