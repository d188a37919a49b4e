"""
Search Constants - Limits and defaults for the Kummer-set searches.
"""


class SearchDefaults:
    """Default settings for max_kummer_dimension."""

    USE_SYMMETRY = True
    SYMMETRY_DEPTH = 2
    DETERMINISTIC = False
    TIME_BUDGET = None  # seconds; None means unbounded
    PROGRESS_INTERVAL = 1 << 16  # nodes between progress log lines
    DEADLINE_CHECK_MASK = 0x3FF  # check the clock every 1024 nodes

    # Symmetry depths understood by the search
    SYMMETRY_DEPTHS = (0, 1, 2)


class CapacityLimits:
    """Size limits on exhaustive work."""

    # brute_force_oracle: d^(2n) - 1 candidates at most
    ORACLE_MAX_CANDIDATES = 255
    # enumerate_maximal_sets only runs for a single tensor factor
    ENUMERATION_MAX_FACTORS = 1
    # States (vectors or ordered vector pairs) an orbit closure may touch
    ORBIT_STATE_CAP = 2_000_000
    # subgroup_generated refuses ambient groups larger than this
    SUBGROUP_MAX_ORDER = 1 << 16
