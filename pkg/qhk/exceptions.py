# -*- mode: python; coding: utf-8 -*-
# Copyright 2026 the qhk developers
# Licensed under the 2-clause BSD license.

"""Errors raised by qhk.

Mathematical checks do not raise on a negative answer, they return a
:class:`qhk.qhk.Verdict`.  These exceptions signal bad input or a broken
precondition.
"""


class QhkError(Exception):
    """Base class for all qhk errors."""


class PresentationError(QhkError, ValueError):
    """A presentation that does not parse or violates the grammar invariants."""

    def __init__(self, message, line=None, column=None):
        self.msg = message
        self.line = line
        self.column = column
        if line is not None:
            where = "line {}".format(line)
            if column is not None:
                where += ", column {}".format(column)
            message = "{}: {}".format(where, message)
        super(PresentationError, self).__init__(message)


class FieldError(QhkError, ValueError):
    pass


class InfiniteAlgebraError(QhkError):
    pass


class GradingError(QhkError):
    pass


class DualityMissingError(QhkError):
    pass


class ResolutionError(QhkError):
    pass


class GammaError(QhkError):
    pass


class OracleGuardError(QhkError):
    pass
