"""
Custom Exceptions - Application-specific exception hierarchy.

This module defines custom exceptions for better error handling
and debugging throughout the application.
"""


class KummerLabException(Exception):
    """Base exception for all Kummer Lab exceptions."""
    pass


# Algebra-level exceptions
class AlgebraException(KummerLabException):
    """Base exception for errors in the monomial model."""
    pass


class ShapeError(AlgebraException):
    """Raised when a value does not fit the algebra shape, or degrees are mixed."""
    pass


class InvalidInputError(AlgebraException):
    """Raised for scalar monomials, duplicates or malformed multiset specs."""
    pass


# Graph exceptions
class GraphException(KummerLabException):
    """Base exception for graph-layer errors."""
    pass


class UnsupportedDegreeError(GraphException):
    """Raised when a degree-4-only operation receives another degree."""
    pass


class InvalidBlockError(GraphException):
    """Raised when a quadruple does not satisfy the block precondition."""
    pass


# Construction exceptions
class ConstructionException(KummerLabException):
    """Base exception for construction and decomposition errors."""
    pass


class InvalidChainError(ConstructionException):
    """Raised when an arrow chain has a non-arrow phase."""
    pass


class InvalidHypothesisError(ConstructionException):
    """Raised when a chain-with-partner hypothesis fails; names the phase."""
    pass


class CertificateError(ConstructionException):
    """Raised when a decomposition output fails its own phase check."""
    pass


# Search exceptions
class SearchException(KummerLabException):
    """Base exception for search errors."""
    pass


class CapacityError(SearchException):
    """Raised when a shape is too large for exhaustive enumeration."""
    pass


class InvalidSearchConfigError(SearchException):
    """Raised for a non-positive time budget, target or worker count."""
    pass


# Document exceptions
class DocumentException(KummerLabException):
    """Base exception for basis document handling."""
    pass


class DocumentFormatError(DocumentException):
    """Raised when a basis document cannot be parsed or validated."""
    pass


class DocumentWriteError(DocumentException):
    """Raised when an output file cannot be written."""
    pass


# Configuration exceptions
class ConfigurationException(KummerLabException):
    """Base exception for configuration-related errors."""
    pass


class ConfigurationLoadError(ConfigurationException):
    """Raised when configuration loading fails."""
    pass


class ConfigurationSaveError(ConfigurationException):
    """Raised when configuration saving fails."""
    pass
