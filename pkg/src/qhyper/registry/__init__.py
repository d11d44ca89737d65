"""Catalogue of verifiable identities and the machinery to check them."""

from fnmatch import fnmatchcase

from ..errors import InvalidArgument
from .core import (
    FAIL,
    NONCONVERGENT,
    PASS,
    POLE,
    Assignment,
    Env,
    IdentityDef,
    VerificationResult,
    audit_r1,
    check,
    compare,
    eval_side,
    make_context,
    negative_control,
    sample_parameters,
    solve_constraints,
    verify,
)
from . import elliptic, nonterminating, terminating
from .elliptic import p0_collapse

_ENTRIES = list(terminating.CATALOGUE) + list(nonterminating.CATALOGUE) + list(elliptic.CATALOGUE)

CATALOGUE = {d.id: d for d in _ENTRIES}


def get(identity_id):
    try:
        return CATALOGUE[identity_id]
    except KeyError:
        raise InvalidArgument(f"unknown identity {identity_id!r}") from None


def select(pattern):
    """Entries whose id matches the glob ``pattern``, in catalogue order."""
    return [d for d in CATALOGUE.values() if fnmatchcase(d.id, pattern)]


def list_identities():
    """Summaries of every catalogue entry."""
    return [d.summary() for d in CATALOGUE.values()]
