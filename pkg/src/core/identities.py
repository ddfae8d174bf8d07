"""Name -> verifier registry used by the command line."""
from typing import Callable, Dict

from ..models.report import RunConfig, VerificationReport
from ..utils.exceptions import UnknownIdentityError
from . import checks, verifiers

Verifier = Callable[[RunConfig], VerificationReport]

IDENTITIES: Dict[str, Verifier] = {
    "no": verifiers.verify_nekrasov_okounkov,
    "hande": verifiers.verify_hande,
    "petreolle": verifiers.verify_petreolle,
    "macdonald-c": verifiers.verify_macdonald_c,
    "thm11": verifiers.verify_type_c_hooks,
    "thm12": verifiers.verify_type_c_dual_hooks,
    "noc": verifiers.verify_noc,
    "nosc": verifiers.verify_nosc,
    "schurinter": checks.verify_schurinter,
    "tau-product": checks.verify_tau_product,
    "lemma35": checks.verify_first_hook,
    "lemma36": checks.verify_sign_parity,
    "structure-dd": checks.verify_structure_dd,
    "structure-sc": checks.verify_structure_sc,
    "ladder": checks.verify_ladder,
    "roundtrip": checks.verify_roundtrip,
    "core-weights": checks.verify_core_weights,
    "reduced-weights": checks.verify_reduced_weights,
    "generators-dd": checks.verify_generators_dd,
    "generators-sc": checks.verify_generators_sc,
}

# which configured caps each identity consumes
USES_T_CAP = {"no", "hande", "petreolle", "macdonald-c", "thm11", "thm12", "noc", "nosc"}
# identities whose T cap may be a half-integer
HALF_GRADED = {"thm12", "nosc"}
USES_Q_CAP = {"hande", "noc", "nosc"}
USES_SEED = {"tau-product"}
USES_WEIGHT = {
    "schurinter",
    "tau-product",
    "lemma35",
    "lemma36",
    "structure-dd",
    "structure-sc",
    "ladder",
    "roundtrip",
    "core-weights",
    "reduced-weights",
    "generators-dd",
    "generators-sc",
}


def run_identity(run: RunConfig) -> VerificationReport:
    try:
        verifier = IDENTITIES[run.identity]
    except KeyError:
        raise UnknownIdentityError(
            f"Unknown identity {run.identity!r}; expected one of {', '.join(sorted(IDENTITIES))}"
        )
    return verifier(run)
