"""Newform elimination: case values, survivor sets, reports and the irreducibility bound."""
from .bound import BoundResult, candidate_a_J, irreducibility_bound
from .cases import (DEFAULT_NORM_CAP, Case1Entry, CaseValues, OracleDisagreement, case1_entry,
                    case1_values, case2_values, case3_values, case_values, image_charpoly,
                    lift_poly, pair_poly)
from .engine import (ALWAYS_KEPT, EliminationReport, FormResult, SlotOutcome, Witness,
                     eliminate_form, run_space, slot_outcome, slots_over, verify_result)
from .newforms import (CACHE_ENV, DataFormatError, Eigenvalue, NewformList, NewformRecord,
                       cache_path, load_newforms, parse_document, parse_record, record_to_wire)

__all__ = [
    "BoundResult", "candidate_a_J", "irreducibility_bound",
    "DEFAULT_NORM_CAP", "Case1Entry", "CaseValues", "OracleDisagreement", "case1_entry",
    "case1_values", "case2_values", "case3_values", "case_values", "image_charpoly",
    "lift_poly", "pair_poly",
    "ALWAYS_KEPT", "EliminationReport", "FormResult", "SlotOutcome", "Witness",
    "eliminate_form", "run_space", "slot_outcome", "slots_over", "verify_result",
    "CACHE_ENV", "DataFormatError", "Eigenvalue", "NewformList", "NewformRecord",
    "cache_path", "load_newforms", "parse_document", "parse_record", "record_to_wire",
]
