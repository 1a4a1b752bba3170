"""
End-to-end pipelines: certificates, their verification and serialization, and parameter scans.
"""

from .prop_p7 import certify_prop_p7
from .scans import independence_scan, lemma2_scan, summary_table
from .serialize import dump_model, parse_certificate
from .theorem_mt import certify_theorem_mt, first_admissible_m
from .verify import verify_certificate
