"""Groebner-category toolkit: finite-set categories, well-quasi-orders and a
truncated Groebner engine for free functor modules over prime fields."""

__version__ = "0.1.0"
