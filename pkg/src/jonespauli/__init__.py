"""Jones vectors, dyadic constructions and the Pauli spin algebra."""

__version__ = "0.1.0"
