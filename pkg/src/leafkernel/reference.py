"""Reference values for n = 3.

The table lists sleaf_3(l) and cleaf_3(l) on l = 0.0, 0.1, ..., 4.1, printed
to 5-6 decimals.  ``ADDITION_EXAMPLE`` is a worked evaluation of the squared
addition formula at (l1, l2) = (0.2, 0.3) and its signed square root.
"""

TABLE_TOLERANCE = 2e-5

# (l, sleaf_3(l), cleaf_3(l))
SLEAF3_CLEAF3_TABLE = (
    (0.0, 0.000000, 1.000000),
    (0.1, 0.100000, 0.985184),
    (0.2, 0.199999, 0.942810),
    (0.3, 0.299984, 0.878184),
    (0.4, 0.399883, 0.797825),
    (0.5, 0.499443, 0.707632),
    (0.6, 0.598009, 0.611979),
    (0.7, 0.694183, 0.513647),
    (0.8, 0.785387, 0.414176),
    (0.9, 0.867486, 0.314304),
    (1.0, 0.934768, 0.214324),
    (1.1, 0.980708, 0.114325),
    (1.2, 0.999692, 0.014325),
    (1.3, 0.989090, -0.085670),
    (1.4, 0.950393, -0.185670),
    (1.5, 0.888560, -0.285660),
    (1.6, 0.810064, -0.385580),
    (1.7, 0.720972, -0.485220),
    (1.8, 0.625896, -0.583990),
    (1.9, 0.527828, -0.680640),
    (2.0, 0.428461, -0.772770),
    (2.1, 0.328621, -0.856490),
    (2.2, 0.228649, -0.926290),
    (2.3, 0.128651, -0.975670),
    (2.4, 0.028651, -0.998770),
    (2.5, -0.071350, -0.992410),
    (2.6, -0.171350, -0.957500),
    (2.7, -0.271340, -0.898590),
    (2.8, -0.371280, -0.822090),
    (2.9, -0.470980, -0.734190),
    (3.0, -0.569930, -0.639750),
    (3.1, -0.667000, -0.541980),
    (3.2, -0.759970, -0.442740),
    (3.3, -0.845200, -0.342940),
    (3.4, -0.917390, -0.242970),
    (3.5, -0.970090, -0.142980),
    (3.6, -0.997240, -0.042980),
    (3.7, -0.995140, 0.057024),
    (3.8, -0.964110, 0.157024),
    (3.9, -0.908270, 0.257019),
    (4.0, -0.833880, 0.356971),
    (4.1, -0.747280, 0.456727),
)

ADDITION_EXAMPLE = {
    "l1": 0.2,
    "l2": 0.3,
    "squared": 0.2494431,
    "squared_tol": 1e-6,
    "signed": 0.49944,
    "signed_tol": 1e-5,
}
