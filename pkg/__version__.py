"""Version information for dmod"""

__version__ = "1.1.0"
__version_info__ = (1, 1, 0)
__release_date__ = "2026-10-12"

# Version history
VERSION_HISTORY = {
    "1.1.0": {
        "date": "2026-10-12",
        "description": "Experiment harness and syzygy reuse",
        "changes": [
            "NEW: experiment command - kappa over a grid of Reiffen curves, --jobs K worker processes",
            "NEW: --reuse-syzygies seeds the order-d syzygy module with the order-(d-1) one",
            "NEW: char-ideal --point prints the restricted ideal and m^(d)",
            "NEW: thread-safe LRU cache for Groebner bases (DMOD_GB_CACHE_SIZE)",
            "FIXED: point retry after repeated undefined multiplicities recomputes only the current order",
        ],
        "breaking_changes": [],
        "migration": "No migration needed"
    },
    "1.0.0": {
        "date": "2026-09-28",
        "description": "Initial release",
        "changes": [
            "Sparse polynomials over QQ, Buchberger with product and chain criteria",
            "Syzygies, elimination, quotient, saturation, Krull dimension",
            "Weyl algebra, left Groebner bases, characteristic ideals",
            "Truncated annihilators Ann^(d)(f^a) and kappa(f^-1) for plane curves",
            "Commands: kappa, ann, char-ideal, genericity, reiffen",
        ]
    }
}
