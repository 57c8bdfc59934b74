"""Membership and factorization for the monoid and group generated by
L_u = [[1, 0], [u, 1]] and R_v = [[1, v], [0, 1]], via continued fractions."""

from .cf import (PQSeq, SeqClass, concat, evaluate, in_class, negate_seq,
                 normalize, prepend_L, prepend_R, short_cf, transform_f,
                 transform_g)
from .errors import (DegenerateSequence, Inconsistency, InvalidInput,
                     NotUnimodular, SearchSpaceTooLarge, SequenceClassError,
                     SL2CFError, UnsupportedParameters)
from .matrix import (IDENTITY, GenWord, Mat2, Params, ScriptWitness,
                     gen_power, in_script_G, in_script_S, inv, mul,
                     word_to_matrix)
from .membership import (Diagnostic, MembershipVerdict, Mode, check,
                         check_group, check_monoid, complete_matrix,
                         divisibility_check, extract_word, sanov_factor)
from .oracle import DensityReport, EnumSpec, density_scan, enumerate_words, oracle_check

__version__ = "0.1.0"
