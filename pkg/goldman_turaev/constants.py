DEFAULT_GENUS = 2
DEFAULT_SEED = 0
DEFAULT_MAX_LEN = 6
DEFAULT_SAMPLES = 200

# random words in the oracle suite may be longer than the exhaustive bound
ORACLE_RANDOM_MAX_LEN = 12
# rows per array batch in the exhaustive oracle pass
ORACLE_CHUNK_ROWS = 2**15
# word lengths for the bialgebra identity suite
BIALGEBRA_CLASS_MAX_LEN = 3
BIALGEBRA_RANDOM_MAX_LEN = 5

ENV_GENUS = "GOLDMAN_TURAEV_GENUS"
ENV_SEED = "GOLDMAN_TURAEV_SEED"
ENV_MAX_LEN = "GOLDMAN_TURAEV_MAX_LEN"
ENV_SAMPLES = "GOLDMAN_TURAEV_SAMPLES"

SEED_LIMIT = 2**64
