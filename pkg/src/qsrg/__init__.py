"""Construction, verification and classification of strongly regular q-ary graphs."""

__version__ = "0.1.0"
