"""invcat: invariants of free linear categories under finite group actions.

Build a quiver with arrow-space dimensions, attach invertible matrices to
the arrows for each group generator, and the engine computes, exactly
(over Q, Q(zeta_n) or F_p): the fixed/composite/irreducible subspace of
every path up to a degree bound, the generator quiver of the invariant
category with a completeness certificate, an executable freeness check,
and the Gabriel / Donovan-Freislich representation-type classification.
"""

from .fields import (
    CyclotomicElement,
    CyclotomicField,
    DivisionByZero,
    FieldError,
    FieldMismatch,
    PrimeField,
    PrimeFieldElement,
    QQ,
    RationalField,
    WrongFieldKind,
    cyclotomic_polynomial,
    euler_phi,
    primitive_root,
)
from .linalg import (
    AmbientMismatch,
    LinAlgError,
    Matrix,
    NotASubspace,
    ShapeMismatch,
    Subspace,
    tensor_vector,
)
from .quiver import (
    CyclicQuiver,
    DEFAULT_PATH_CAP,
    Multigraph,
    Path,
    PathCapExceeded,
    Quiver,
    QuiverError,
    UnknownVertex,
    enumerate_paths,
    is_acyclic,
    longest_path_degree,
    underlying_multigraph,
)
from .action import (
    ActionError,
    ActionSpec,
    CharacterTable,
    ClosureCapExceeded,
    DEFAULT_GROUP_CAP,
    GroupElement,
    NonInvertibleGenerator,
    NotSchurian,
    act_on_path,
    close_group,
    extract_characters,
)
from .engine import (
    DecompositionVerdict,
    EngineError,
    MissingSubPath,
    ProfileTable,
    StringInvariants,
    averaged_fixed_subspace,
    compositions,
    composite_subspace,
    compute_profiles,
    fixed_subspace,
    irreducible_complement,
    schurian_generators,
    verify_decomposition,
)
from .category import (
    CleavingWitness,
    Completeness,
    FreenessVerdict,
    GeneratorEntry,
    InvariantQuiverReport,
    build_invariant_quiver,
    completeness_bound,
    free_category_dims,
    generator_quiver,
    verify_cleaving_schurian,
    verify_freeness,
)
from .reptype import (
    Classification,
    DiagramLabel,
    Disconnected,
    FINITE,
    InvariantClassification,
    KRONECKER_AGAIN,
    SINGLE_ARROW,
    TAME,
    TWO_VERTICES,
    WILD,
    WrongShape,
    classify,
    classify_invariants,
    classify_multigraph,
    kronecker_invariants,
    recognize_component,
)
from .jobs import (
    JobSpec,
    ParseError,
    load_job,
    parse_job,
    report_to_dict,
    run_pipeline,
)

__version__ = "0.1.0"
