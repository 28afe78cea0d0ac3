# RS[7,2] over GF(8): small enough to enumerate every correctable word
ORACLE_M = 3
ORACLE_K = 2
