"""Exact integer-sequence engine: generators, transforms, cross-checks
and a small file-based sequence database."""
from .errors import BudgetExceeded, ParseError, SeqlabError
from .kernel import Sequence
from .seqdb import SeqDatabase, load_db, lookup, superseek

__version__ = "0.1.0"

__all__ = ["BudgetExceeded", "ParseError", "SeqlabError", "Sequence", "SeqDatabase", "load_db", "lookup", "superseek"]
