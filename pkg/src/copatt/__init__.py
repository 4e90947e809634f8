"""Exact counting of segmented patterns in integer compositions, with
bijective encodings of k-parts, palindromic k-parts and four permutation
classes."""
from .compositions import (Composition, MarkedKPart, enumerate_compositions,
                           enumerate_compositions_with_parts, enumerate_marked_kparts,
                           enumerate_palindromes, is_palindrome, reverse, splits)
from .counting import (c_w, composition_count, count_occurrences_total, f_closed, omega,
                       palindrome_kpart_count, pattern_gf, total_kparts)
from .errors import CapMismatchError, OutOfClassError, ResourceCapError
from .patterns import (PosetAlphabet, SegmentedPattern, Spop, count_occurrences,
                       linear_extensions, pattern_count_oracle)
from .series import RationalGF, TruncatedSeries3, expand, invert_unit

__version__ = "0.1.0"

__all__ = [
    "Composition", "MarkedKPart", "enumerate_compositions", "enumerate_compositions_with_parts",
    "enumerate_marked_kparts", "enumerate_palindromes", "is_palindrome", "reverse", "splits",
    "c_w", "composition_count", "count_occurrences_total", "f_closed", "omega",
    "palindrome_kpart_count", "pattern_gf", "total_kparts",
    "CapMismatchError", "OutOfClassError", "ResourceCapError",
    "PosetAlphabet", "SegmentedPattern", "Spop", "count_occurrences", "linear_extensions",
    "pattern_count_oracle", "RationalGF", "TruncatedSeries3", "expand", "invert_unit",
]
