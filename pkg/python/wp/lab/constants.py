import numpy as np


class Constants():
    WPLAB_LOGNAME = 'wplab'

    # Upper half-plane numerics
    HYPERBOLIC_TOLERANCE = 1e-9             # |tr| > 2 + tol is hyperbolic
    DETERMINANT_TOLERANCE = 1e-12
    ENDPOINT_TOLERANCE = 1e-10

    # Group construction and enumeration
    RESIDUAL_TOLERANCE = 1e-9
    DEDUP_TOLERANCE = 1e-8
    TIE_TOLERANCE = 1e-7
    CUSP_CUTOFF = 4.0
    BASEPOINT = 1j

    # Generator alphabet, upper case letters are inverses
    GENUS2_ALPHABET = 'abcd'
    TORUS_ALPHABET = 'ab'

    # Geometry and WP metric
    THICK_FLOOR = 0.05
    FLOW_STEP = 0.01
    FD_STEP = 1e-5

    # Bounds
    SYS_FLOOR = 2 * np.arcsinh(1.0)
    U_DEFAULT = 4.0 / 3.0

    # Anchors written into artifact metadata
    ANCHOR_DIST_AXIS = 'Eq. (i-dis)'
    ANCHOR_SANDWICH = 'Eq. (i-exp)'
    ANCHOR_MEAN_VALUE = 'Lemma mvp'
    ANCHOR_SYSTOLE = 'ell_sys, systolic set'
    ANCHOR_RIERA = 'Eq. (Rie-f)'
    ANCHOR_LIFT_SEPARATION = 'Lemma 3-l-1'
    ANCHOR_NORMALIZATION = 'Lemma 3-l-2'
    ANCHOR_TAIL = 'Eq. (u-2)'
    ANCHOR_GLQI = 'Prop. gl-qi'
    ANCHOR_SHORT = 'Lemma short-1'
    ANCHOR_LIPSCHITZ = 'Theorem mt-lip'
    ANCHOR_FLOW = 'Eq. (5.11-1)'
    ANCHOR_LEAF = 'Theorem leaf'
    ANCHOR_STRATUM = 'Theorem d-stra'
    ANCHOR_SYS_FLOOR = 'Eq. (5-1)'
    ANCHOR_SYS_LOWER = 'Eq. (5-2)'
    ANCHOR_SYS_UPPER = 'Eq. (5-3)'
    ANCHOR_INRADIUS = 'Theorem mt-g'
    ANCHOR_INRADIUS_N = 'Theorem mt-n'
    ANCHOR_VOLUME = 'Gromov-Bishop chain'
    ANCHOR_DECAY = 'Theorem decay-0'
    ANCHOR_GRAM = 'Riera pairings'
    ANCHOR_PATH = 'WP path length'

    # Output file names
    SYSTOLE_CSV_FILENAME = 'systole-classes.csv'
    SYSTOLE_JSON_FILENAME = 'systole.json'
    RIERA_JSON_FILENAME = 'riera-{alpha}-{beta}.json'
    GRAM_CSV_FILENAME = 'gram.csv'
    PATH_CSV_FILENAME = 'path.csv'
    PATH_JSON_FILENAME = 'path-report.json'
    PINCH_CSV_FILENAME = 'pinch.csv'
    PINCH_JSON_FILENAME = 'pinch-report.json'
    BOUNDS_CSV_FILENAME = 'bounds.csv'
    BOUNDS_JSON_FILENAME = 'bounds.json'
    DECAY_CSV_FILENAME = 'decay.csv'
    DECAY_JSON_FILENAME = 'decay.json'
    VERIFY_CSV_FILENAME = 'verify.csv'
    VERIFY_JSON_FILENAME = 'verify.json'
    VERIFY_SAMPLES_CSV_FILENAME = 'verify-samples.csv'
    FIGURE_FILENAME = '{name}.svg'
