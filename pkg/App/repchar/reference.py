reference_values = {
    "state_space_dimension": 16777216,  # 2^24
    "table_rows": 72,
    "theta1_states": 256,  # 44 + 84 + 128
    # boson count = fermion count for each spin 0..8
    "sector_counts": [183040, 439296, 465920, 326144, 161280, 56320, 13312, 1920, 128],
    "dimensions": [
        {"dynkin": [0, 0, 0, 0], "dimension": 1, "name": "singlet"},
        {"dynkin": [1, 0, 0, 0], "dimension": 9, "name": "vector"},
        {"dynkin": [0, 1, 0, 0], "dimension": 36, "name": "2-rank antisymmetric"},
        {"dynkin": [0, 0, 1, 0], "dimension": 84, "name": "3-rank antisymmetric"},
        {"dynkin": [0, 0, 0, 1], "dimension": 16, "name": "spinor"},
        {"dynkin": [0, 0, 0, 2], "dimension": 126, "name": "4-rank antisymmetric"},
        {"dynkin": [1, 0, 0, 1], "dimension": 128, "name": "vector-spinor"},
        {"dynkin": [2, 0, 0, 0], "dimension": 44, "name": "2-rank symmetric traceless"},
    ],
    "theta1_content": [[2, 0, 0, 0], [0, 0, 1, 0], [1, 0, 0, 1]],
    "singlet_spins": {0: 1, 6: 1},
    "vector_spins": {1: 1, 3: 1, 5: 1, 7: 1},
    "spin8_column": {(0, 0, 1, 0): 1, (2, 0, 0, 0): 1, (1, 0, 0, 1): 1},
}
