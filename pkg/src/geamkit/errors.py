"""Exception types used across the package."""


class GeamError(Exception):
    """Base class for all geamkit errors."""


class ValidationError(GeamError):
    """Invalid parameters, layouts, or inputs that fail a precondition."""


class PositivityError(GeamError):
    """A constructed measurement operator is not positive semidefinite.

    Carries the offending (group, element) pair and its minimum eigenvalue.
    """

    def __init__(self, group, element, min_eigenvalue):
        self.group = group
        self.element = element
        self.min_eigenvalue = min_eigenvalue
        super().__init__(
            f"operator ({group}, {element}) is not PSD: "
            f"min eigenvalue {min_eigenvalue:.3e} < -1e-10"
        )
