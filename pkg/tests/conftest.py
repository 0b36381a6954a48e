import pytest

# Aggregated knight-walk counts Q_{i,j} from (1, 1), every cell with
# 2i + j <= 24 and i + 2j <= 24 that a walk can reach: 40 printed entries.
KNIGHT_TABLE = {
    (0, 12): 24, (2, 11): 108, (1, 10): 24, (4, 10): 312,
    (0, 9): 6, (3, 9): 84, (6, 9): 720,
    (2, 8): 24, (5, 8): 204, (8, 8): 1440,
    (1, 7): 6, (4, 7): 60, (7, 7): 408,
    (0, 6): 2, (3, 6): 18, (6, 6): 120, (9, 6): 720,
    (2, 5): 6, (5, 5): 36, (8, 5): 204,
    (1, 4): 2, (4, 4): 12, (7, 4): 60, (10, 4): 312,
    (0, 3): 1, (3, 3): 4, (6, 3): 18, (9, 3): 84,
    (2, 2): 2, (5, 2): 6, (8, 2): 24, (11, 2): 108,
    (1, 1): 1, (4, 1): 2, (7, 1): 6, (10, 1): 24,
    (3, 0): 1, (6, 0): 2, (9, 0): 6, (12, 0): 24,
}


def in_table_region(i: int, j: int) -> bool:
    return 2 * i + j <= 24 and i + 2 * j <= 24


# a_{i,j} of a_{i,j} = a_{i+1,j-2} + a_{i-2,j+1}, one row per j
REC2_ROWS = {
    0: [1, 1, 1, 1, 1, 1, 1],
    1: [1, 1, 1, 1, 1, 1, 1],
    2: [1, 1, 2, 2, 3, 3, 5],
    3: [1, 1, 2, 2, 4, 5, 7],
    4: [1, 1, 3, 4, 6, 10],
    5: [1, 1, 3, 5, 10, 14],
    6: [1, 1, 5, 7],
}


@pytest.fixture
def knight_table():
    return dict(KNIGHT_TABLE)
