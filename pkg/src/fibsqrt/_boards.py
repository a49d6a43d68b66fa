"""Frozen board renders, keyed by snapshot step. Generated by scripts/freeze_boards.py."""

LA_743 = {
    2: (
        '3_2\n'
        '*7* *4* *3*\n'
        '    2_1\n'
        '    2_1\n'
    ),
    5: (
        '            (14_5\n'
        '3_2 6_4\n'
        '*7* *4* *3*\n'
        '    2_1 7_3\n'
        '    2_1 7_3\n'
    ),
}

LA_8754 = {
    5: (
        '                (105_5\n'
        '    1_4\n'
        '    6_2 1_4\n'
        '*8* *7* *5* *4*\n'
        '        9_1 3_3\n'
        '        9_1 3_3\n'
    ),
}

LA_12345 = {
    5: (
        '                    (24_5\n'
        '        2_2 2_4\n'
        '*1* *2* *3* *4* *5*\n'
        '        1_1 1_1 1_3\n'
        '        1_1 1_1 1_3\n'
    ),
}

LA_927435 = {
    5: (
        '                        (66_5\n'
        '        5_2 8_2 7_4\n'
        '*9* *2* *7* *4* *3* *5*\n'
        '            9_1 6_1 3_3\n'
        '            9_1 6_1 3_3\n'
    ),
}

LA_72340000 = {
    7: (
        '    3_5\n'
        '    8_2 3_6 9_7\n'
        '*7* *2* *3* *4* *0* *0* *0* *0*\n'
        '                8_1 5_4\n'
        '            1_3 6_3\n'
    ),
    13: (
        '    3_5     4_12\n'
        '    8_2 3_6  9_7 5_13\n'
        '*7* *2* *3*  *4*  *0* *0*  *0*  *0*\n'
        '                  8_1 5_4  0_9 5_11\n'
        '             1_8  7_8 0_8 0_10\n'
    ),
    15: (
        '                                     (4975_14\n'
        '    3_5     4_12 4_14\n'
        '    8_2 3_6  9_7 5_13 9_14 7_14 5_14\n'
        '*7* *2* *3*  *4*  *0*  *0*  *0*  *0*\n'
        '                  8_1  5_4  0_9 5_11\n'
        '            1_15 7_15 0_15 1_15 0_15\n'
    ),
}

DPG_864 = {
    6: (
        '            (23_6\n'
        '1_5\n'
        '4_2 0_5\n'
        '*8* *6* *4*\n'
        '    2_1 9_4\n'
        '    4_3\n'
    ),
}
