'''
Created on 12 Oct 2026

@author: ante
'''


class UsageError(ValueError):
    """Bad command line or malformed user input (exit code 2)."""


class VerificationError(RuntimeError):
    """A mathematical check that has to hold did not (exit code 1)."""


class MissingRuleError(KeyError):
    """A formal derivation met a variable it has no rule for."""
