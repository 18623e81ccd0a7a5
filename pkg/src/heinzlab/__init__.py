"""Matrix means, unitarily invariant norms and Heinz/Young-type inequality checks."""
__version__ = "0.1.0"
