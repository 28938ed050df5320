"""Published reference MSE/MAE results, keyed ``model -> (dataset, horizon) -> (mse, mae)``.

These values are quoted for side-by-side context only and are never produced
by this package. ``UNIVARIATE`` covers the ETT target-channel task,
``MULTIVARIATE`` the eight-dataset task and ``ABLATION`` the linear-family
comparison (same task as ``MULTIVARIATE``).
"""

UNIVARIATE = {
    "FPN-fusion": {
        ("ETTh1", 96): (0.055, 0.178),
        ("ETTh1", 192): (0.071, 0.205),
        ("ETTh1", 336): (0.078, 0.221),
        ("ETTh1", 720): (0.087, 0.233),
        ("ETTh2", 96): (0.124, 0.271),
        ("ETTh2", 192): (0.165, 0.32),
        ("ETTh2", 336): (0.184, 0.348),
        ("ETTh2", 720): (0.227, 0.382),
        ("ETTm1", 96): (0.026, 0.121),
        ("ETTm1", 192): (0.039, 0.149),
        ("ETTm1", 336): (0.051, 0.171),
        ("ETTm1", 720): (0.071, 0.203),
        ("ETTm2", 96): (0.063, 0.181),
        ("ETTm2", 192): (0.09, 0.224),
        ("ETTm2", 336): (0.116, 0.256),
        ("ETTm2", 720): (0.17, 0.318),
    },
    "PatchTST": {
        ("ETTh1", 96): (0.055, 0.179),
        ("ETTh1", 192): (0.071, 0.205),
        ("ETTh1", 336): (0.076, 0.22),
        ("ETTh1", 720): (0.087, 0.232),
        ("ETTh2", 96): (0.129, 0.282),
        ("ETTh2", 192): (0.168, 0.328),
        ("ETTh2", 336): (0.171, 0.336),
        ("ETTh2", 720): (0.223, 0.38),
        ("ETTm1", 96): (0.026, 0.121),
        ("ETTm1", 192): (0.039, 0.15),
        ("ETTm1", 336): (0.053, 0.173),
        ("ETTm1", 720): (0.073, 0.206),
        ("ETTm2", 96): (0.065, 0.186),
        ("ETTm2", 192): (0.094, 0.231),
        ("ETTm2", 336): (0.12, 0.265),
        ("ETTm2", 720): (0.171, 0.322),
    },
    "DLinear": {
        ("ETTh1", 96): (0.056, 0.18),
        ("ETTh1", 192): (0.071, 0.204),
        ("ETTh1", 336): (0.098, 0.244),
        ("ETTh1", 720): (0.189, 0.359),
        ("ETTh2", 96): (0.131, 0.279),
        ("ETTh2", 192): (0.176, 0.329),
        ("ETTh2", 336): (0.209, 0.367),
        ("ETTh2", 720): (0.276, 0.426),
        ("ETTm1", 96): (0.028, 0.123),
        ("ETTm1", 192): (0.045, 0.156),
        ("ETTm1", 336): (0.061, 0.182),
        ("ETTm1", 720): (0.08, 0.21),
        ("ETTm2", 96): (0.063, 0.183),
        ("ETTm2", 192): (0.092, 0.227),
        ("ETTm2", 336): (0.119, 0.261),
        ("ETTm2", 720): (0.175, 0.32),
    },
    "FEDformer": {
        ("ETTh1", 96): (0.079, 0.215),
        ("ETTh1", 192): (0.104, 0.245),
        ("ETTh1", 336): (0.119, 0.27),
        ("ETTh1", 720): (0.142, 0.299),
        ("ETTh2", 96): (0.128, 0.271),
        ("ETTh2", 192): (0.185, 0.33),
        ("ETTh2", 336): (0.231, 0.378),
        ("ETTh2", 720): (0.278, 0.42),
        ("ETTm1", 96): (0.033, 0.14),
        ("ETTm1", 192): (0.058, 0.186),
        ("ETTm1", 336): (0.084, 0.231),
        ("ETTm1", 720): (0.102, 0.25),
        ("ETTm2", 96): (0.067, 0.198),
        ("ETTm2", 192): (0.102, 0.245),
        ("ETTm2", 336): (0.13, 0.279),
        ("ETTm2", 720): (0.178, 0.325),
    },
    "Autoformer": {
        ("ETTh1", 96): (0.071, 0.206),
        ("ETTh1", 192): (0.114, 0.262),
        ("ETTh1", 336): (0.107, 0.258),
        ("ETTh1", 720): (0.126, 0.283),
        ("ETTh2", 96): (0.153, 0.306),
        ("ETTh2", 192): (0.204, 0.351),
        ("ETTh2", 336): (0.246, 0.389),
        ("ETTh2", 720): (0.268, 0.409),
        ("ETTm1", 96): (0.056, 0.183),
        ("ETTm1", 192): (0.081, 0.216),
        ("ETTm1", 336): (0.076, 0.218),
        ("ETTm1", 720): (0.11, 0.267),
        ("ETTm2", 96): (0.065, 0.189),
        ("ETTm2", 192): (0.118, 0.256),
        ("ETTm2", 336): (0.154, 0.305),
        ("ETTm2", 720): (0.182, 0.335),
    },
    "Informer": {
        ("ETTh1", 96): (0.193, 0.377),
        ("ETTh1", 192): (0.217, 0.395),
        ("ETTh1", 336): (0.202, 0.381),
        ("ETTh1", 720): (0.183, 0.355),
        ("ETTh2", 96): (0.213, 0.373),
        ("ETTh2", 192): (0.227, 0.387),
        ("ETTh2", 336): (0.242, 0.401),
        ("ETTh2", 720): (0.291, 0.439),
        ("ETTm1", 96): (0.109, 0.277),
        ("ETTm1", 192): (0.151, 0.31),
        ("ETTm1", 336): (0.427, 0.591),
        ("ETTm1", 720): (0.438, 0.586),
        ("ETTm2", 96): (0.088, 0.225),
        ("ETTm2", 192): (0.132, 0.283),
        ("ETTm2", 336): (0.18, 0.336),
        ("ETTm2", 720): (0.3, 0.435),
    },
    "LogTrans": {
        ("ETTh1", 96): (0.283, 0.468),
        ("ETTh1", 192): (0.234, 0.409),
        ("ETTh1", 336): (0.386, 0.546),
        ("ETTh1", 720): (0.475, 0.629),
        ("ETTh2", 96): (0.217, 0.379),
        ("ETTh2", 192): (0.281, 0.429),
        ("ETTh2", 336): (0.293, 0.437),
        ("ETTh2", 720): (0.218, 0.387),
        ("ETTm1", 96): (0.049, 0.171),
        ("ETTm1", 192): (0.157, 0.317),
        ("ETTm1", 336): (0.289, 0.459),
        ("ETTm1", 720): (0.43, 0.579),
        ("ETTm2", 96): (0.075, 0.208),
        ("ETTm2", 192): (0.129, 0.275),
        ("ETTm2", 336): (0.154, 0.302),
        ("ETTm2", 720): (0.16, 0.321),
    },
}

MULTIVARIATE = {
    "FPN-fusion": {
        ("weather", 96): (0.143, 0.208),
        ("weather", 192): (0.187, 0.234),
        ("weather", 336): (0.238, 0.274),
        ("weather", 720): (0.304, 0.325),
        ("traffic", 96): (0.408, 0.273),
        ("traffic", 192): (0.419, 0.286),
        ("traffic", 336): (0.422, 0.285),
        ("traffic", 720): (0.443, 0.299),
        ("electricity", 96): (0.132, 0.229),
        ("electricity", 192): (0.146, 0.244),
        ("electricity", 336): (0.162, 0.262),
        ("electricity", 720): (0.2, 0.297),
        ("ILI", 24): (1.696, 0.789),
        ("ILI", 36): (1.693, 0.811),
        ("ILI", 48): (1.867, 0.881),
        ("ILI", 60): (1.421, 0.747),
        ("ETTh1", 96): (0.368, 0.394),
        ("ETTh1", 192): (0.406, 0.417),
        ("ETTh1", 336): (0.408, 0.425),
        ("ETTh1", 720): (0.458, 0.462),
        ("ETTh2", 96): (0.279, 0.333),
        ("ETTh2", 192): (0.343, 0.395),
        ("ETTh2", 336): (0.379, 0.423),
        ("ETTh2", 720): (0.446, 0.464),
        ("ETTm1", 96): (0.286, 0.335),
        ("ETTm1", 192): (0.33, 0.359),
        ("ETTm1", 336): (0.368, 0.38),
        ("ETTm1", 720): (0.425, 0.413),
        ("ETTm2", 96): (0.163, 0.25),
        ("ETTm2", 192): (0.216, 0.287),
        ("ETTm2", 336): (0.271, 0.324),
        ("ETTm2", 720): (0.36, 0.389),
    },
    "PatchTST": {
        ("weather", 96): (0.147, 0.198),
        ("weather", 192): (0.19, 0.24),
        ("weather", 336): (0.242, 0.282),
        ("weather", 720): (0.304, 0.328),
        ("traffic", 96): (0.36, 0.249),
        ("traffic", 192): (0.379, 0.256),
        ("traffic", 336): (0.392, 0.264),
        ("traffic", 720): (0.432, 0.286),
        ("electricity", 96): (0.129, 0.222),
        ("electricity", 192): (0.141, 0.241),
        ("electricity", 336): (0.163, 0.259),
        ("electricity", 720): (0.197, 0.29),
        ("ILI", 24): (1.281, 0.704),
        ("ILI", 36): (1.251, 0.752),
        ("ILI", 48): (1.673, 0.854),
        ("ILI", 60): (1.526, 0.795),
        ("ETTh1", 96): (0.37, 0.4),
        ("ETTh1", 192): (0.413, 0.431),
        ("ETTh1", 336): (0.422, 0.44),
        ("ETTh1", 720): (0.447, 0.468),
        ("ETTh2", 96): (0.274, 0.336),
        ("ETTh2", 192): (0.339, 0.379),
        ("ETTh2", 336): (0.331, 0.38),
        ("ETTh2", 720): (0.379, 0.422),
        ("ETTm1", 96): (0.29, 0.342),
        ("ETTm1", 192): (0.328, 0.365),
        ("ETTm1", 336): (0.361, 0.393),
        ("ETTm1", 720): (0.416, 0.419),
        ("ETTm2", 96): (0.162, 0.254),
        ("ETTm2", 192): (0.216, 0.293),
        ("ETTm2", 336): (0.269, 0.329),
        ("ETTm2", 720): (0.35, 0.38),
    },
    "DLinear": {
        ("weather", 96): (0.176, 0.237),
        ("weather", 192): (0.22, 0.282),
        ("weather", 336): (0.265, 0.319),
        ("weather", 720): (0.323, 0.362),
        ("traffic", 96): (0.41, 0.282),
        ("traffic", 192): (0.423, 0.287),
        ("traffic", 336): (0.436, 0.296),
        ("traffic", 720): (0.466, 0.315),
        ("electricity", 96): (0.14, 0.237),
        ("electricity", 192): (0.153, 0.249),
        ("electricity", 336): (0.169, 0.267),
        ("electricity", 720): (0.203, 0.301),
        ("ILI", 24): (2.215, 1.081),
        ("ILI", 36): (1.963, 0.963),
        ("ILI", 48): (2.13, 1.024),
        ("ILI", 60): (2.368, 1.096),
        ("ETTh1", 96): (0.375, 0.399),
        ("ETTh1", 192): (0.405, 0.416),
        ("ETTh1", 336): (0.439, 0.443),
        ("ETTh1", 720): (0.472, 0.49),
        ("ETTh2", 96): (0.289, 0.353),
        ("ETTh2", 192): (0.383, 0.418),
        ("ETTh2", 336): (0.448, 0.465),
        ("ETTh2", 720): (0.605, 0.551),
        ("ETTm1", 96): (0.299, 0.343),
        ("ETTm1", 192): (0.335, 0.365),
        ("ETTm1", 336): (0.369, 0.386),
        ("ETTm1", 720): (0.425, 0.421),
        ("ETTm2", 96): (0.167, 0.26),
        ("ETTm2", 192): (0.224, 0.303),
        ("ETTm2", 336): (0.281, 0.342),
        ("ETTm2", 720): (0.397, 0.421),
    },
    "FEDformer": {
        ("weather", 96): (0.238, 0.314),
        ("weather", 192): (0.275, 0.329),
        ("weather", 336): (0.339, 0.377),
        ("weather", 720): (0.389, 0.409),
        ("traffic", 96): (0.576, 0.359),
        ("traffic", 192): (0.61, 0.38),
        ("traffic", 336): (0.608, 0.375),
        ("traffic", 720): (0.621, 0.375),
        ("electricity", 96): (0.186, 0.302),
        ("electricity", 192): (0.197, 0.311),
        ("electricity", 336): (0.213, 0.328),
        ("electricity", 720): (0.233, 0.344),
        ("ILI", 24): (2.624, 1.095),
        ("ILI", 36): (2.516, 1.021),
        ("ILI", 48): (2.505, 1.041),
        ("ILI", 60): (2.742, 1.122),
        ("ETTh1", 96): (0.376, 0.415),
        ("ETTh1", 192): (0.423, 0.446),
        ("ETTh1", 336): (0.444, 0.462),
        ("ETTh1", 720): (0.469, 0.492),
        ("ETTh2", 96): (0.332, 0.374),
        ("ETTh2", 192): (0.407, 0.446),
        ("ETTh2", 336): (0.4, 0.447),
        ("ETTh2", 720): (0.412, 0.469),
        ("ETTm1", 96): (0.326, 0.39),
        ("ETTm1", 192): (0.365, 0.415),
        ("ETTm1", 336): (0.392, 0.425),
        ("ETTm1", 720): (0.446, 0.458),
        ("ETTm2", 96): (0.18, 0.271),
        ("ETTm2", 192): (0.252, 0.318),
        ("ETTm2", 336): (0.324, 0.364),
        ("ETTm2", 720): (0.41, 0.42),
    },
    "Autoformer": {
        ("weather", 96): (0.249, 0.329),
        ("weather", 192): (0.325, 0.37),
        ("weather", 336): (0.351, 0.391),
        ("weather", 720): (0.415, 0.426),
        ("traffic", 96): (0.597, 0.371),
        ("traffic", 192): (0.607, 0.382),
        ("traffic", 336): (0.623, 0.387),
        ("traffic", 720): (0.639, 0.395),
        ("electricity", 96): (0.196, 0.313),
        ("electricity", 192): (0.211, 0.324),
        ("electricity", 336): (0.214, 0.327),
        ("electricity", 720): (0.236, 0.342),
        ("ILI", 24): (2.906, 1.182),
        ("ILI", 36): (2.585, 1.038),
        ("ILI", 48): (3.024, 1.145),
        ("ILI", 60): (2.761, 1.114),
        ("ETTh1", 96): (0.435, 0.446),
        ("ETTh1", 192): (0.456, 0.457),
        ("ETTh1", 336): (0.486, 0.487),
        ("ETTh1", 720): (0.515, 0.517),
        ("ETTh2", 96): (0.332, 0.368),
        ("ETTh2", 192): (0.426, 0.434),
        ("ETTh2", 336): (0.477, 0.479),
        ("ETTh2", 720): (0.453, 0.49),
        ("ETTm1", 96): (0.51, 0.492),
        ("ETTm1", 192): (0.514, 0.495),
        ("ETTm1", 336): (0.51, 0.492),
        ("ETTm1", 720): (0.527, 0.493),
        ("ETTm2", 96): (0.205, 0.293),
        ("ETTm2", 192): (0.278, 0.336),
        ("ETTm2", 336): (0.343, 0.379),
        ("ETTm2", 720): (0.414, 0.419),
    },
    "Informer": {
        ("weather", 96): (0.354, 0.405),
        ("weather", 192): (0.419, 0.434),
        ("weather", 336): (0.583, 0.543),
        ("weather", 720): (0.916, 0.705),
        ("traffic", 96): (0.733, 0.41),
        ("traffic", 192): (0.777, 0.435),
        ("traffic", 336): (0.776, 0.434),
        ("traffic", 720): (0.827, 0.466),
        ("electricity", 96): (0.304, 0.393),
        ("electricity", 192): (0.327, 0.417),
        ("electricity", 336): (0.333, 0.422),
        ("electricity", 720): (0.351, 0.427),
        ("ILI", 24): (4.657, 1.449),
        ("ILI", 36): (4.65, 1.463),
        ("ILI", 48): (5.004, 1.542),
        ("ILI", 60): (5.071, 1.543),
        ("ETTh1", 96): (0.941, 0.769),
        ("ETTh1", 192): (1.007, 0.786),
        ("ETTh1", 336): (1.038, 0.784),
        ("ETTh1", 720): (1.144, 0.857),
        ("ETTh2", 96): (1.549, 0.952),
        ("ETTh2", 192): (3.792, 1.542),
        ("ETTh2", 336): (4.215, 1.642),
        ("ETTh2", 720): (3.656, 1.619),
        ("ETTm1", 96): (0.626, 0.56),
        ("ETTm1", 192): (0.725, 0.619),
        ("ETTm1", 336): (1.005, 0.741),
        ("ETTm1", 720): (1.133, 0.845),
        ("ETTm2", 96): (0.355, 0.462),
        ("ETTm2", 192): (0.595, 0.586),
        ("ETTm2", 336): (1.27, 0.871),
        ("ETTm2", 720): (3.001, 1.267),
    },
    "Pyraformer": {
        ("weather", 96): (0.896, 0.556),
        ("weather", 192): (0.622, 0.624),
        ("weather", 336): (0.739, 0.753),
        ("weather", 720): (1.004, 0.934),
        ("traffic", 96): (2.085, 0.468),
        ("traffic", 192): (0.867, 0.467),
        ("traffic", 336): (0.869, 0.469),
        ("traffic", 720): (0.881, 0.473),
        ("electricity", 96): (0.386, 0.449),
        ("electricity", 192): (0.386, 0.443),
        ("electricity", 336): (0.378, 0.443),
        ("electricity", 720): (0.376, 0.445),
        ("ILI", 24): (1.42, 2.012),
        ("ILI", 36): (7.394, 2.031),
        ("ILI", 48): (7.551, 2.057),
        ("ILI", 60): (7.662, 2.1),
        ("ETTh1", 96): (0.664, 0.612),
        ("ETTh1", 192): (0.79, 0.681),
        ("ETTh1", 336): (0.891, 0.738),
        ("ETTh1", 720): (0.963, 0.782),
        ("ETTh2", 96): (0.645, 0.597),
        ("ETTh2", 192): (0.788, 0.683),
        ("ETTh2", 336): (0.907, 0.747),
        ("ETTh2", 720): (0.963, 0.783),
        ("ETTm1", 96): (0.543, 0.51),
        ("ETTm1", 192): (0.557, 0.537),
        ("ETTm1", 336): (0.754, 0.655),
        ("ETTm1", 720): (0.908, 0.724),
        ("ETTm2", 96): (0.435, 0.507),
        ("ETTm2", 192): (0.73, 0.673),
        ("ETTm2", 336): (1.201, 0.845),
        ("ETTm2", 720): (3.625, 1.451),
    },
}

ABLATION = {
    "FPN-fusion": {
        ("weather", 96): (0.143, 0.208),
        ("weather", 192): (0.187, 0.234),
        ("weather", 336): (0.238, 0.274),
        ("weather", 720): (0.304, 0.325),
        ("traffic", 96): (0.408, 0.273),
        ("traffic", 192): (0.419, 0.286),
        ("traffic", 336): (0.422, 0.285),
        ("traffic", 720): (0.443, 0.299),
        ("electricity", 96): (0.132, 0.229),
        ("electricity", 192): (0.146, 0.244),
        ("electricity", 336): (0.162, 0.262),
        ("electricity", 720): (0.2, 0.297),
        ("ILI", 24): (1.696, 0.789),
        ("ILI", 36): (1.693, 0.811),
        ("ILI", 48): (1.867, 0.881),
        ("ILI", 60): (1.421, 0.747),
        ("ETTh1", 96): (0.368, 0.394),
        ("ETTh1", 192): (0.406, 0.417),
        ("ETTh1", 336): (0.408, 0.425),
        ("ETTh1", 720): (0.458, 0.462),
        ("ETTh2", 96): (0.279, 0.333),
        ("ETTh2", 192): (0.343, 0.395),
        ("ETTh2", 336): (0.379, 0.423),
        ("ETTh2", 720): (0.446, 0.464),
        ("ETTm1", 96): (0.286, 0.335),
        ("ETTm1", 192): (0.327, 0.359),
        ("ETTm1", 336): (0.368, 0.38),
        ("ETTm1", 720): (0.425, 0.415),
        ("ETTm2", 96): (0.163, 0.25),
        ("ETTm2", 192): (0.216, 0.287),
        ("ETTm2", 336): (0.271, 0.324),
        ("ETTm2", 720): (0.361, 0.386),
    },
    "FPNMLinear": {
        ("weather", 96): (0.143, 0.208),
        ("weather", 192): (0.187, 0.252),
        ("weather", 336): (0.24, 0.297),
        ("weather", 720): (0.316, 0.359),
        ("traffic", 96): (0.411, 0.282),
        ("traffic", 192): (0.42, 0.294),
        ("traffic", 336): (0.436, 0.295),
        ("traffic", 720): (0.458, 0.303),
        ("electricity", 96): (0.133, 0.23),
        ("electricity", 192): (0.148, 0.244),
        ("electricity", 336): (0.163, 0.262),
        ("electricity", 720): (0.2, 0.297),
        ("ILI", 24): (2.097, 0.968),
        ("ILI", 36): (2.108, 0.977),
        ("ILI", 48): (2.246, 1.025),
        ("ILI", 60): (2.198, 1.023),
        ("ETTh1", 96): (0.373, 0.398),
        ("ETTh1", 192): (0.406, 0.415),
        ("ETTh1", 336): (0.427, 0.435),
        ("ETTh1", 720): (0.471, 0.497),
        ("ETTh2", 96): (0.29, 0.341),
        ("ETTh2", 192): (0.385, 0.416),
        ("ETTh2", 336): (0.453, 0.478),
        ("ETTh2", 720): (0.412, 0.469),
        ("ETTm1", 96): (0.287, 0.335),
        ("ETTm1", 192): (0.328, 0.359),
        ("ETTm1", 336): (0.369, 0.384),
        ("ETTm1", 720): (0.425, 0.415),
        ("ETTm2", 96): (0.168, 0.262),
        ("ETTm2", 192): (0.236, 0.326),
        ("ETTm2", 336): (0.283, 0.364),
        ("ETTm2", 720): (0.392, 0.41),
    },
    "FPNLinear": {
        ("weather", 96): (0.145, 0.209),
        ("weather", 192): (0.19, 0.258),
        ("weather", 336): (0.242, 0.299),
        ("weather", 720): (0.316, 0.358),
        ("traffic", 96): (0.409, 0.282),
        ("traffic", 192): (0.421, 0.295),
        ("traffic", 336): (0.436, 0.292),
        ("traffic", 720): (0.46, 0.312),
        ("electricity", 96): (0.133, 0.23),
        ("electricity", 192): (0.148, 0.245),
        ("electricity", 336): (0.163, 0.263),
        ("electricity", 720): (0.2, 0.297),
        ("ILI", 24): (2.115, 0.951),
        ("ILI", 36): (2.141, 0.982),
        ("ILI", 48): (2.247, 1.036),
        ("ILI", 60): (2.17, 1.013),
        ("ETTh1", 96): (0.38, 0.392),
        ("ETTh1", 192): (0.406, 0.421),
        ("ETTh1", 336): (0.454, 0.445),
        ("ETTh1", 720): (0.473, 0.483),
        ("ETTh2", 96): (0.289, 0.345),
        ("ETTh2", 192): (0.382, 0.419),
        ("ETTh2", 336): (0.461, 0.483),
        ("ETTh2", 720): (0.453, 0.49),
        ("ETTm1", 96): (0.287, 0.335),
        ("ETTm1", 192): (0.328, 0.359),
        ("ETTm1", 336): (0.383, 0.398),
        ("ETTm1", 720): (0.425, 0.416),
        ("ETTm2", 96): (0.173, 0.264),
        ("ETTm2", 192): (0.225, 0.308),
        ("ETTm2", 336): (0.303, 0.357),
        ("ETTm2", 720): (0.363, 0.399),
    },
    "DLinear": {
        ("weather", 96): (0.176, 0.237),
        ("weather", 192): (0.22, 0.282),
        ("weather", 336): (0.265, 0.319),
        ("weather", 720): (0.323, 0.362),
        ("traffic", 96): (0.41, 0.282),
        ("traffic", 192): (0.423, 0.287),
        ("traffic", 336): (0.436, 0.296),
        ("traffic", 720): (0.466, 0.315),
        ("electricity", 96): (0.14, 0.237),
        ("electricity", 192): (0.153, 0.249),
        ("electricity", 336): (0.169, 0.267),
        ("electricity", 720): (0.203, 0.301),
        ("ILI", 24): (2.215, 1.081),
        ("ILI", 36): (1.963, 0.963),
        ("ILI", 48): (2.13, 1.024),
        ("ILI", 60): (2.368, 1.096),
        ("ETTh1", 96): (0.375, 0.399),
        ("ETTh1", 192): (0.405, 0.416),
        ("ETTh1", 336): (0.439, 0.443),
        ("ETTh1", 720): (0.472, 0.49),
        ("ETTh2", 96): (0.289, 0.353),
        ("ETTh2", 192): (0.383, 0.418),
        ("ETTh2", 336): (0.448, 0.465),
        ("ETTh2", 720): (0.605, 0.551),
        ("ETTm1", 96): (0.299, 0.343),
        ("ETTm1", 192): (0.335, 0.365),
        ("ETTm1", 336): (0.369, 0.386),
        ("ETTm1", 720): (0.425, 0.421),
        ("ETTm2", 96): (0.167, 0.26),
        ("ETTm2", 192): (0.224, 0.303),
        ("ETTm2", 336): (0.281, 0.342),
        ("ETTm2", 720): (0.397, 0.421),
    },
    "NLinear": {
        ("weather", 96): (0.182, 0.232),
        ("weather", 192): (0.225, 0.269),
        ("weather", 336): (0.271, 0.301),
        ("weather", 720): (0.338, 0.348),
        ("traffic", 96): (0.41, 0.279),
        ("traffic", 192): (0.423, 0.284),
        ("traffic", 336): (0.435, 0.29),
        ("traffic", 720): (0.464, 0.307),
        ("electricity", 96): (0.141, 0.237),
        ("electricity", 192): (0.154, 0.248),
        ("electricity", 336): (0.171, 0.265),
        ("electricity", 720): (0.21, 0.297),
        ("ILI", 24): (1.683, 0.858),
        ("ILI", 36): (1.703, 0.859),
        ("ILI", 48): (1.719, 0.884),
        ("ILI", 60): (1.819, 0.917),
        ("ETTh1", 96): (0.374, 0.394),
        ("ETTh1", 192): (0.408, 0.415),
        ("ETTh1", 336): (0.429, 0.427),
        ("ETTh1", 720): (0.44, 0.453),
        ("ETTh2", 96): (0.277, 0.338),
        ("ETTh2", 192): (0.344, 0.381),
        ("ETTh2", 336): (0.357, 0.4),
        ("ETTh2", 720): (0.394, 0.436),
        ("ETTm1", 96): (0.306, 0.348),
        ("ETTm1", 192): (0.349, 0.375),
        ("ETTm1", 336): (0.375, 0.388),
        ("ETTm1", 720): (0.433, 0.422),
        ("ETTm2", 96): (0.167, 0.255),
        ("ETTm2", 192): (0.221, 0.293),
        ("ETTm2", 336): (0.274, 0.327),
        ("ETTm2", 720): (0.368, 0.384),
    },
}



def quoted(model: str, dataset: str, horizon: int, univariate: bool = False):
    """Quoted ``(mse, mae)`` or ``None``; dataset names match case-insensitively."""
    table = UNIVARIATE if univariate else MULTIVARIATE
    cells = table.get(model)
    if cells is None and not univariate:
        cells = ABLATION.get(model)
    if cells is None:
        return None
    for (ds, h), v in cells.items():
        if ds.lower() == dataset.lower() and h == horizon:
            return v
    return None
