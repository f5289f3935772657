//! Expanded coefficient tables for the degree-16 polynomial in x12 and its
//! equal-block cofactor. Each coefficient is a polynomial in (k1, k, p),
//! stored as `(coefficient, deg k1, deg k, deg p)` monomials.

/// `(coefficient, exponent of k1, exponent of k, exponent of p)`.
pub(crate) type Term = (i64, u32, u32, u32);

/// Coefficients a_0 ..= a_16.
pub(crate) const F3_TABLE: [&[Term]; 17] = [
    // a_0
    &[
        (1, 7, 5, 3),
        (-5, 7, 5, 2),
        (2, 8, 4, 2),
        (8, 7, 5, 1),
        (-6, 8, 4, 1),
        (2, 9, 3, 1),
        (2, 7, 3, 2),
        (-4, 7, 5, 0),
        (4, 8, 4, 0),
        (-3, 9, 3, 0),
        (1, 10, 2, 0),
        (-7, 7, 3, 1),
        (2, 8, 2, 1),
        (6, 7, 3, 0),
        (-3, 8, 2, 0),
        (1, 9, 1, 0),
        (1, 7, 1, 1),
        (-2, 7, 1, 0),
    ],
    // a_1
    &[
        (-4, 7, 5, 3),
        (16, 7, 5, 2),
        (-8, 8, 4, 2),
        (-20, 7, 5, 1),
        (20, 8, 4, 1),
        (-6, 9, 3, 1),
        (-4, 7, 3, 2),
        (8, 7, 5, 0),
        (-12, 8, 4, 0),
        (6, 9, 3, 0),
        (-2, 10, 2, 0),
        (10, 7, 3, 1),
        (-4, 8, 2, 1),
        (-6, 7, 3, 0),
        (6, 8, 2, 0),
    ],
    // a_2
    &[
        (6, 6, 6, 4),
        (-34, 6, 6, 3),
        (18, 7, 5, 3),
        (70, 6, 6, 2),
        (-60, 7, 5, 2),
        (23, 8, 4, 2),
        (16, 6, 4, 3),
        (-62, 6, 6, 1),
        (60, 7, 5, 1),
        (-43, 8, 4, 1),
        (12, 9, 3, 1),
        (-67, 6, 4, 2),
        (20, 6, 6, 0),
        (18, 7, 3, 2),
        (-18, 7, 5, 0),
        (17, 8, 4, 0),
        (-6, 9, 3, 0),
        (1, 10, 2, 0),
        (87, 6, 4, 1),
        (-36, 7, 3, 1),
        (9, 8, 2, 1),
        (10, 6, 2, 2),
        (-33, 6, 4, 0),
        (12, 7, 3, 0),
        (-7, 8, 2, 0),
        (-27, 6, 2, 1),
        (14, 6, 2, 0),
    ],
    // a_3
    &[
        (-24, 6, 6, 4),
        (112, 6, 6, 3),
        (-52, 7, 5, 3),
        (-188, 6, 6, 2),
        (156, 7, 5, 2),
        (-42, 8, 4, 2),
        (-40, 6, 4, 3),
        (136, 6, 6, 1),
        (-152, 7, 5, 1),
        (60, 8, 4, 1),
        (-14, 9, 3, 1),
        (134, 6, 4, 2),
        (-36, 6, 6, 0),
        (-48, 7, 3, 2),
        (48, 7, 5, 0),
        (-18, 8, 4, 0),
        (6, 9, 3, 0),
        (-140, 6, 4, 1),
        (110, 7, 3, 1),
        (-12, 8, 2, 1),
        (-8, 6, 2, 2),
        (46, 6, 4, 0),
        (-54, 7, 3, 0),
        (12, 8, 2, 0),
        (-4, 9, 1, 0),
        (20, 6, 2, 1),
        (-8, 7, 1, 1),
        (-12, 6, 2, 0),
        (12, 7, 1, 0),
    ],
    // a_4
    &[
        (15, 5, 7, 5),
        (-95, 5, 7, 4),
        (66, 6, 6, 4),
        (236, 5, 7, 3),
        (-250, 6, 6, 3),
        (97, 7, 5, 3),
        (50, 5, 5, 4),
        (-288, 5, 7, 2),
        (324, 6, 6, 2),
        (-230, 7, 5, 2),
        (52, 8, 4, 2),
        (-245, 5, 5, 3),
        (173, 5, 7, 1),
        (82, 6, 4, 3),
        (-162, 6, 6, 1),
        (163, 7, 5, 1),
        (-54, 8, 4, 1),
        (6, 9, 3, 1),
        (436, 5, 5, 2),
        (-41, 5, 7, 0),
        (-212, 6, 4, 2),
        (22, 6, 6, 0),
        (65, 7, 3, 2),
        (-30, 7, 5, 0),
        (11, 8, 4, 0),
        (-4, 9, 3, 0),
        (39, 5, 3, 3),
        (-336, 5, 5, 1),
        (156, 6, 4, 1),
        (-111, 7, 3, 1),
        (16, 8, 2, 1),
        (-142, 5, 3, 2),
        (95, 5, 5, 0),
        (-35, 6, 4, 0),
        (52, 7, 3, 0),
        (-16, 8, 2, 0),
        (4, 9, 1, 0),
        (165, 5, 3, 1),
        (-8, 6, 2, 1),
        (-70, 5, 3, 0),
        (8, 6, 2, 0),
        (-12, 7, 1, 0),
        (-8, 5, 1, 1),
        (16, 5, 1, 0),
    ],
    // a_5
    &[
        (-60, 5, 7, 5),
        (320, 5, 7, 4),
        (-144, 6, 6, 4),
        (-664, 5, 7, 3),
        (500, 6, 6, 3),
        (-126, 7, 5, 3),
        (-140, 5, 5, 4),
        (672, 5, 7, 2),
        (-632, 6, 6, 2),
        (234, 7, 5, 2),
        (-42, 8, 4, 2),
        (582, 5, 5, 3),
        (-332, 5, 7, 1),
        (-188, 6, 4, 3),
        (340, 6, 6, 1),
        (-108, 7, 5, 1),
        (36, 8, 4, 1),
        (-890, 5, 5, 2),
        (64, 5, 7, 0),
        (562, 6, 4, 2),
        (-64, 6, 6, 0),
        (-72, 7, 3, 2),
        (-56, 5, 3, 3),
        (600, 5, 5, 1),
        (-544, 6, 4, 1),
        (108, 7, 3, 1),
        (-24, 8, 2, 1),
        (200, 5, 3, 2),
        (-152, 5, 5, 0),
        (-56, 6, 2, 2),
        (176, 6, 4, 0),
        (-36, 7, 3, 0),
        (12, 8, 2, 0),
        (-220, 5, 3, 1),
        (144, 6, 2, 1),
        (76, 5, 3, 0),
        (-76, 6, 2, 0),
    ],
    // a_6
    &[
        (20, 4, 8, 6),
        (-140, 4, 8, 5),
        (130, 5, 7, 5),
        (404, 4, 8, 4),
        (-560, 5, 7, 4),
        (211, 6, 6, 4),
        (80, 4, 6, 5),
        (-616, 4, 8, 3),
        (884, 5, 7, 3),
        (-613, 6, 6, 3),
        (116, 7, 5, 3),
        (-449, 4, 6, 4),
        (524, 4, 8, 2),
        (210, 5, 5, 4),
        (-592, 5, 7, 2),
        (605, 6, 6, 2),
        (-182, 7, 5, 2),
        (15, 8, 4, 2),
        (1013, 4, 6, 3),
        (-236, 4, 8, 1),
        (-688, 5, 5, 3),
        (122, 5, 7, 1),
        (225, 6, 4, 3),
        (-215, 6, 6, 1),
        (74, 7, 5, 1),
        (-20, 8, 4, 1),
        (76, 4, 4, 4),
        (-1163, 4, 6, 2),
        (44, 4, 8, 0),
        (774, 5, 5, 2),
        (16, 5, 7, 0),
        (-577, 6, 4, 2),
        (12, 6, 6, 0),
        (80, 7, 3, 2),
        (-8, 7, 5, 0),
        (6, 8, 4, 0),
        (-359, 4, 4, 3),
        (683, 4, 6, 1),
        (16, 5, 3, 3),
        (-320, 5, 5, 1),
        (491, 6, 4, 1),
        (-144, 7, 3, 1),
        (20, 8, 2, 1),
        (668, 4, 4, 2),
        (-164, 4, 6, 0),
        (-88, 5, 3, 2),
        (24, 5, 5, 0),
        (32, 6, 2, 2),
        (-112, 6, 4, 0),
        (48, 7, 3, 0),
        (-16, 8, 2, 0),
        (-587, 4, 4, 1),
        (80, 5, 3, 1),
        (-116, 6, 2, 1),
        (16, 7, 1, 1),
        (-56, 4, 2, 2),
        (174, 4, 4, 0),
        (8, 5, 3, 0),
        (52, 6, 2, 0),
        (-8, 7, 1, 0),
        (4, 8, 0, 0),
        (144, 4, 2, 1),
        (8, 5, 1, 1),
        (-60, 4, 2, 0),
        (-16, 5, 1, 0),
        (-4, 6, 0, 0),
    ],
    // a_7
    &[
        (-80, 4, 8, 6),
        (480, 4, 8, 5),
        (-220, 5, 7, 5),
        (-1176, 4, 8, 4),
        (860, 5, 7, 4),
        (-210, 6, 6, 4),
        (-240, 4, 6, 5),
        (1504, 4, 8, 3),
        (-1276, 5, 7, 3),
        (480, 6, 6, 3),
        (-70, 7, 5, 3),
        (1186, 4, 6, 4),
        (-1056, 4, 8, 2),
        (-360, 5, 5, 4),
        (868, 5, 7, 2),
        (-270, 6, 6, 2),
        (90, 7, 5, 2),
        (-2368, 4, 6, 3),
        (384, 4, 8, 1),
        (1306, 5, 5, 3),
        (-248, 5, 7, 1),
        (-180, 6, 4, 3),
        (-60, 6, 6, 1),
        (-144, 4, 4, 4),
        (2390, 4, 6, 2),
        (-56, 4, 8, 0),
        (-1750, 5, 5, 2),
        (16, 5, 7, 0),
        (360, 6, 4, 2),
        (60, 6, 6, 0),
        (-60, 7, 3, 2),
        (-20, 7, 5, 0),
        (692, 4, 4, 3),
        (-1220, 4, 6, 1),
        (-144, 5, 3, 3),
        (1024, 5, 5, 1),
        (-132, 6, 4, 1),
        (60, 7, 3, 1),
        (-1208, 4, 4, 2),
        (252, 4, 6, 0),
        (548, 5, 3, 2),
        (-220, 5, 5, 0),
        (-48, 6, 4, 0),
        (16, 7, 3, 0),
        (900, 4, 4, 1),
        (-660, 5, 3, 1),
        (48, 4, 2, 2),
        (-240, 4, 4, 0),
        (240, 5, 3, 0),
        (-96, 4, 2, 1),
        (48, 5, 1, 1),
        (48, 4, 2, 0),
        (-48, 5, 1, 0),
    ],
    // a_8
    &[
        (15, 3, 9, 7),
        (-115, 3, 9, 6),
        (150, 4, 8, 6),
        (376, 3, 9, 5),
        (-730, 4, 8, 5),
        (265, 5, 7, 5),
        (70, 3, 7, 6),
        (-680, 3, 9, 4),
        (1356, 4, 8, 4),
        (-910, 5, 7, 4),
        (150, 6, 6, 4),
        (-441, 3, 7, 5),
        (735, 3, 9, 3),
        (310, 4, 6, 5),
        (-1124, 4, 8, 3),
        (1127, 5, 7, 3),
        (-310, 6, 6, 3),
        (20, 7, 5, 3),
        (1198, 3, 7, 4),
        (-475, 3, 9, 2),
        (-1246, 4, 6, 4),
        (286, 4, 8, 2),
        (395, 5, 5, 4),
        (-571, 5, 7, 2),
        (181, 6, 6, 2),
        (-40, 7, 5, 2),
        (79, 3, 5, 5),
        (-1812, 3, 7, 3),
        (170, 3, 9, 1),
        (1870, 4, 6, 3),
        (126, 4, 8, 1),
        (-1337, 5, 5, 3),
        (76, 5, 7, 1),
        (160, 6, 4, 3),
        (-32, 6, 6, 1),
        (24, 7, 5, 1),
        (-462, 3, 5, 4),
        (1608, 3, 7, 2),
        (-26, 3, 9, 0),
        (64, 4, 4, 4),
        (-1135, 4, 6, 2),
        (-64, 4, 8, 0),
        (1619, 5, 5, 2),
        (13, 5, 7, 0),
        (-416, 6, 4, 2),
        (11, 6, 6, 0),
        (40, 7, 3, 2),
        (-4, 7, 5, 0),
        (1182, 3, 5, 3),
        (-787, 3, 7, 1),
        (-368, 4, 4, 3),
        (94, 4, 6, 1),
        (128, 5, 3, 3),
        (-746, 5, 5, 1),
        (272, 6, 4, 1),
        (-64, 7, 3, 1),
        (-1596, 3, 5, 2),
        (164, 3, 7, 0),
        (480, 4, 4, 2),
        (107, 4, 6, 0),
        (-528, 5, 3, 2),
        (69, 5, 5, 0),
        (64, 6, 2, 2),
        (-64, 6, 4, 0),
        (24, 7, 3, 0),
        (-136, 3, 3, 3),
        (1051, 3, 5, 1),
        (-64, 4, 4, 1),
        (544, 5, 3, 1),
        (-120, 6, 2, 1),
        (16, 7, 1, 1),
        (456, 3, 3, 2),
        (-254, 3, 5, 0),
        (48, 4, 2, 2),
        (-64, 4, 4, 0),
        (-160, 5, 3, 0),
        (80, 6, 2, 0),
        (-24, 7, 1, 0),
        (-448, 3, 3, 1),
        (-120, 4, 2, 1),
        (-8, 5, 1, 1),
        (144, 3, 3, 0),
        (48, 4, 2, 0),
        (32, 5, 1, 0),
        (16, 3, 1, 1),
        (-32, 3, 1, 0),
    ],
    // a_9
    &[
        (-60, 3, 9, 7),
        (400, 3, 9, 6),
        (-200, 4, 8, 6),
        (-1124, 3, 9, 5),
        (860, 4, 8, 5),
        (-210, 5, 7, 5),
        (-220, 3, 7, 6),
        (1720, 3, 9, 4),
        (-1404, 4, 8, 4),
        (570, 5, 7, 4),
        (-70, 6, 6, 4),
        (1254, 3, 7, 5),
        (-1540, 3, 9, 3),
        (-380, 4, 6, 5),
        (1016, 4, 8, 3),
        (-360, 5, 7, 3),
        (120, 6, 6, 3),
        (-3066, 3, 7, 4),
        (800, 3, 9, 2),
        (1594, 4, 6, 4),
        (-224, 4, 8, 2),
        (-240, 5, 5, 4),
        (-240, 5, 7, 2),
        (-176, 3, 5, 5),
        (4088, 3, 7, 3),
        (-220, 3, 9, 1),
        (-2544, 4, 6, 3),
        (-84, 4, 8, 1),
        (600, 5, 5, 3),
        (330, 5, 7, 1),
        (-80, 6, 4, 3),
        (-80, 6, 6, 1),
        (1072, 3, 5, 4),
        (-3108, 3, 7, 2),
        (24, 3, 9, 0),
        (-176, 4, 4, 4),
        (1864, 4, 6, 2),
        (36, 4, 8, 0),
        (-168, 5, 5, 2),
        (-90, 5, 7, 0),
        (120, 6, 4, 2),
        (30, 6, 6, 0),
        (-2568, 3, 5, 3),
        (1266, 3, 7, 1),
        (896, 4, 4, 3),
        (-572, 4, 6, 1),
        (-456, 5, 5, 1),
        (64, 6, 4, 1),
        (3000, 3, 5, 2),
        (-214, 3, 7, 0),
        (-1576, 4, 4, 2),
        (38, 4, 6, 0),
        (264, 5, 5, 0),
        (-88, 6, 4, 0),
        (208, 3, 3, 3),
        (-1720, 3, 5, 1),
        (1136, 4, 4, 1),
        (144, 5, 3, 1),
        (-624, 3, 3, 2),
        (392, 3, 5, 0),
        (176, 4, 2, 2),
        (-296, 4, 4, 0),
        (-144, 5, 3, 0),
        (48, 6, 2, 0),
        (576, 3, 3, 1),
        (-352, 4, 2, 1),
        (-48, 5, 1, 1),
        (-160, 3, 3, 0),
        (128, 4, 2, 0),
        (48, 5, 1, 0),
        (-16, 6, 0, 0),
        (16, 3, 1, 1),
        (-16, 3, 1, 0),
        (16, 4, 0, 0),
    ],
    // a_10
    &[
        (6, 2, 10, 8),
        (-50, 2, 10, 7),
        (102, 3, 9, 7),
        (182, 2, 10, 6),
        (-556, 3, 9, 6),
        (197, 4, 8, 6),
        (32, 2, 8, 7),
        (-378, 2, 10, 5),
        (1188, 3, 9, 5),
        (-773, 4, 8, 5),
        (116, 5, 7, 5),
        (-221, 2, 8, 6),
        (490, 2, 10, 4),
        (262, 3, 7, 6),
        (-1170, 3, 9, 4),
        (1123, 4, 8, 4),
        (-290, 5, 7, 4),
        (15, 6, 6, 4),
        (697, 2, 8, 5),
        (-406, 2, 10, 3),
        (-1252, 3, 7, 5),
        (350, 3, 9, 3),
        (371, 4, 6, 5),
        (-702, 4, 8, 3),
        (204, 5, 7, 3),
        (-40, 6, 6, 3),
        (42, 2, 6, 6),
        (-1307, 2, 8, 4),
        (210, 2, 10, 2),
        (2344, 3, 7, 4),
        (288, 3, 9, 2),
        (-1553, 4, 6, 4),
        (143, 4, 8, 2),
        (160, 5, 5, 4),
        (-32, 5, 7, 2),
        (36, 6, 6, 2),
        (-289, 2, 6, 5),
        (1558, 2, 8, 3),
        (-62, 2, 10, 1),
        (96, 3, 5, 5),
        (-1904, 3, 7, 3),
        (-264, 3, 9, 1),
        (2414, 4, 6, 3),
        (11, 4, 8, 1),
        (-544, 5, 5, 3),
        (32, 5, 7, 1),
        (40, 6, 4, 3),
        (-12, 6, 6, 1),
        (938, 2, 6, 4),
        (-1159, 2, 8, 2),
        (8, 2, 10, 0),
        (-656, 3, 5, 4),
        (238, 3, 7, 2),
        (62, 3, 9, 0),
        (192, 4, 4, 4),
        (-1652, 4, 6, 2),
        (1, 4, 8, 0),
        (512, 5, 5, 2),
        (-30, 5, 7, 0),
        (-96, 6, 4, 2),
        (1, 6, 6, 0),
        (-1734, 2, 6, 3),
        (489, 2, 8, 1),
        (1200, 3, 5, 3),
        (548, 3, 7, 1),
        (-1000, 4, 4, 3),
        (419, 4, 6, 1),
        (96, 5, 3, 3),
        (-224, 5, 5, 1),
        (72, 6, 4, 1),
        (-136, 2, 4, 4),
        (1826, 2, 6, 2),
        (-89, 2, 8, 0),
        (-592, 3, 5, 2),
        (-236, 3, 7, 0),
        (1616, 4, 4, 2),
        (1, 4, 6, 0),
        (-304, 5, 3, 2),
        (96, 5, 5, 0),
        (24, 6, 2, 2),
        (-16, 6, 4, 0),
        (576, 2, 4, 3),
        (-1009, 2, 6, 1),
        (32, 3, 3, 3),
        (-240, 3, 5, 1),
        (-1064, 4, 4, 1),
        (384, 5, 3, 1),
        (-72, 6, 2, 1),
        (-960, 2, 4, 2),
        (226, 2, 6, 0),
        (-112, 3, 3, 2),
        (192, 3, 5, 0),
        (-128, 4, 2, 2),
        (176, 4, 4, 0),
        (-176, 5, 3, 0),
        (40, 6, 2, 0),
        (784, 2, 4, 1),
        (176, 3, 3, 1),
        (336, 4, 2, 1),
        (-64, 5, 1, 1),
        (80, 2, 2, 2),
        (-184, 2, 4, 0),
        (-96, 3, 3, 0),
        (-120, 4, 2, 0),
        (64, 5, 1, 0),
        (-16, 6, 0, 0),
        (-208, 2, 2, 1),
        (-32, 3, 1, 1),
        (48, 2, 2, 0),
        (32, 3, 1, 0),
        (16, 4, 0, 0),
    ],
    // a_11
    &[
        (-24, 2, 10, 8),
        (176, 2, 10, 7),
        (-108, 3, 9, 7),
        (-556, 2, 10, 6),
        (500, 3, 9, 6),
        (-126, 4, 8, 6),
        (-104, 2, 8, 7),
        (984, 2, 10, 5),
        (-848, 3, 9, 5),
        (396, 4, 8, 5),
        (-42, 5, 7, 5),
        (666, 2, 8, 6),
        (-1060, 2, 10, 4),
        (-224, 3, 7, 6),
        (520, 3, 9, 4),
        (-270, 4, 8, 4),
        (90, 5, 7, 4),
        (-1916, 2, 8, 5),
        (704, 2, 10, 3),
        (1042, 3, 7, 5),
        (180, 3, 9, 3),
        (-180, 4, 6, 5),
        (-360, 4, 8, 3),
        (-104, 2, 6, 6),
        (3170, 2, 8, 4),
        (-276, 2, 10, 2),
        (-1762, 3, 7, 4),
        (-412, 3, 9, 2),
        (540, 4, 6, 4),
        (630, 4, 8, 2),
        (-60, 5, 5, 4),
        (-120, 5, 7, 2),
        (764, 2, 6, 5),
        (-3200, 2, 8, 3),
        (56, 2, 10, 1),
        (-104, 3, 5, 5),
        (1144, 3, 7, 3),
        (200, 3, 9, 1),
        (-72, 4, 6, 3),
        (-324, 4, 8, 1),
        (120, 5, 5, 3),
        (90, 5, 7, 1),
        (-2316, 2, 6, 4),
        (1934, 2, 8, 2),
        (-4, 2, 10, 0),
        (660, 3, 5, 4),
        (80, 3, 7, 2),
        (-32, 3, 9, 0),
        (-1080, 4, 6, 2),
        (54, 4, 8, 0),
        (96, 5, 5, 2),
        (-18, 5, 7, 0),
        (3704, 2, 6, 3),
        (-636, 2, 8, 1),
        (-1368, 3, 5, 3),
        (-410, 3, 7, 1),
        (1116, 4, 6, 1),
        (-264, 5, 5, 1),
        (272, 2, 4, 4),
        (-3312, 2, 6, 2),
        (86, 2, 8, 0),
        (1184, 3, 5, 2),
        (130, 3, 7, 0),
        (432, 4, 4, 2),
        (-324, 4, 6, 0),
        (108, 5, 5, 0),
        (-1088, 2, 4, 3),
        (1580, 2, 6, 1),
        (176, 3, 3, 3),
        (-400, 3, 5, 1),
        (-864, 4, 4, 1),
        (144, 5, 3, 1),
        (1648, 2, 4, 2),
        (-316, 2, 6, 0),
        (-528, 3, 3, 2),
        (28, 3, 5, 0),
        (-144, 4, 2, 2),
        (432, 4, 4, 0),
        (-144, 5, 3, 0),
        (-1120, 2, 4, 1),
        (544, 3, 3, 1),
        (288, 4, 2, 1),
        (-48, 5, 1, 1),
        (-48, 2, 2, 2),
        (288, 2, 4, 0),
        (-192, 3, 3, 0),
        (-144, 4, 2, 0),
        (48, 5, 1, 0),
        (96, 2, 2, 1),
        (-48, 3, 1, 1),
        (-48, 2, 2, 0),
        (48, 3, 1, 0),
    ],
    // a_12
    &[
        (1, 1, 11, 9),
        (-9, 1, 11, 8),
        (38, 2, 10, 8),
        (36, 1, 11, 7),
        (-230, 2, 10, 7),
        (83, 3, 9, 7),
        (6, 1, 9, 8),
        (-84, 1, 11, 6),
        (556, 2, 10, 6),
        (-358, 3, 9, 6),
        (52, 4, 8, 6),
        (-43, 1, 9, 7),
        (126, 1, 11, 5),
        (118, 2, 8, 7),
        (-634, 2, 10, 5),
        (569, 3, 9, 5),
        (-146, 4, 8, 5),
        (6, 5, 7, 5),
        (152, 1, 9, 6),
        (-126, 1, 11, 4),
        (-652, 2, 8, 6),
        (220, 2, 10, 4),
        (179, 3, 7, 6),
        (-380, 3, 9, 4),
        (101, 4, 8, 4),
        (-20, 5, 7, 4),
        (9, 1, 7, 7),
        (-348, 1, 9, 5),
        (84, 1, 11, 3),
        (1464, 2, 8, 5),
        (262, 2, 10, 3),
        (-889, 3, 7, 5),
        (85, 3, 9, 3),
        (80, 4, 6, 5),
        (16, 4, 8, 3),
        (24, 5, 7, 3),
        (-66, 1, 7, 6),
        (545, 1, 9, 4),
        (-36, 1, 11, 2),
        (64, 2, 6, 6),
        (-1513, 2, 8, 4),
        (-340, 2, 10, 2),
        (1658, 3, 7, 4),
        (-38, 3, 9, 2),
        (-336, 4, 6, 4),
        (26, 4, 8, 2),
        (20, 5, 5, 4),
        (-12, 5, 7, 2),
        (261, 1, 7, 5),
        (-571, 1, 9, 3),
        (9, 1, 11, 1),
        (-520, 2, 6, 5),
        (322, 2, 8, 3),
        (154, 2, 10, 1),
        (128, 3, 5, 5),
        (-1472, 3, 7, 3),
        (63, 3, 9, 1),
        (384, 4, 6, 3),
        (-86, 4, 8, 1),
        (-64, 5, 5, 3),
        (2, 5, 7, 1),
        (-654, 1, 7, 4),
        (378, 1, 9, 2),
        (-1, 1, 11, 0),
        (1240, 2, 6, 4),
        (774, 2, 8, 2),
        (-26, 2, 10, 0),
        (-812, 3, 5, 4),
        (673, 3, 7, 2),
        (-24, 3, 9, 0),
        (64, 4, 4, 4),
        (-224, 4, 6, 2),
        (37, 4, 8, 0),
        (72, 5, 5, 2),
        (-48, 1, 5, 5),
        (1027, 1, 7, 3),
        (-142, 1, 9, 1),
        (-1072, 2, 6, 3),
        (-696, 2, 8, 1),
        (1784, 3, 5, 3),
        (-191, 3, 7, 1),
        (-272, 4, 4, 3),
        (240, 4, 6, 1),
        (16, 5, 3, 3),
        (-32, 5, 5, 1),
        (248, 1, 5, 4),
        (-966, 1, 7, 2),
        (23, 1, 9, 0),
        (-48, 2, 4, 4),
        (-112, 2, 6, 2),
        (183, 2, 8, 0),
        (-1856, 3, 5, 2),
        (42, 3, 7, 0),
        (512, 4, 4, 2),
        (-144, 4, 6, 0),
        (-72, 5, 3, 2),
        (4, 5, 5, 0),
        (-632, 1, 5, 3),
        (495, 1, 7, 1),
        (208, 2, 4, 3),
        (696, 2, 6, 1),
        (-248, 3, 3, 3),
        (824, 3, 5, 1),
        (-464, 4, 4, 1),
        (80, 5, 3, 1),
        (936, 1, 5, 2),
        (-106, 1, 7, 0),
        (-80, 2, 4, 2),
        (-296, 2, 6, 0),
        (840, 3, 3, 2),
        (-68, 3, 5, 0),
        (-128, 4, 2, 2),
        (224, 4, 4, 0),
        (-24, 5, 3, 0),
        (96, 1, 3, 3),
        (-632, 1, 5, 1),
        (-272, 2, 4, 1),
        (-768, 3, 3, 1),
        (256, 4, 2, 1),
        (-32, 5, 1, 1),
        (-336, 1, 3, 2),
        (128, 1, 5, 0),
        (-96, 2, 2, 2),
        (128, 2, 4, 0),
        (176, 3, 3, 0),
        (-192, 4, 2, 0),
        (32, 5, 1, 0),
        (288, 1, 3, 1),
        (192, 2, 2, 1),
        (32, 3, 1, 1),
        (-48, 1, 3, 0),
        (-32, 2, 2, 0),
        (-32, 3, 1, 0),
        (16, 4, 0, 0),
        (-16, 1, 1, 1),
        (16, 1, 1, 0),
        (-16, 2, 0, 0),
    ],
    // a_13
    &[
        (-4, 1, 11, 9),
        (32, 1, 11, 8),
        (-32, 2, 10, 8),
        (-112, 1, 11, 7),
        (156, 2, 10, 7),
        (-42, 3, 9, 7),
        (-20, 1, 9, 8),
        (224, 1, 11, 6),
        (-256, 2, 10, 6),
        (150, 3, 9, 6),
        (-14, 4, 8, 6),
        (138, 1, 9, 7),
        (-280, 1, 11, 5),
        (-68, 2, 8, 7),
        (52, 2, 10, 5),
        (-108, 3, 9, 5),
        (36, 4, 8, 5),
        (-454, 1, 9, 6),
        (224, 1, 11, 4),
        (334, 2, 8, 6),
        (360, 2, 10, 4),
        (-72, 3, 7, 6),
        (-240, 3, 9, 4),
        (-24, 1, 7, 7),
        (912, 1, 9, 5),
        (-112, 1, 11, 3),
        (-496, 2, 8, 5),
        (-508, 2, 10, 3),
        (252, 3, 7, 5),
        (510, 3, 9, 3),
        (-24, 4, 6, 5),
        (-80, 4, 8, 3),
        (200, 1, 7, 6),
        (-1180, 1, 9, 4),
        (32, 1, 11, 2),
        (-24, 2, 6, 6),
        (-88, 2, 8, 4),
        (304, 2, 10, 2),
        (12, 3, 7, 4),
        (-378, 3, 9, 2),
        (60, 4, 6, 4),
        (90, 4, 8, 2),
        (-732, 1, 7, 5),
        (970, 1, 9, 3),
        (-4, 1, 11, 1),
        (176, 2, 6, 5),
        (1012, 2, 8, 3),
        (-84, 2, 10, 1),
        (-984, 3, 7, 3),
        (120, 3, 9, 1),
        (64, 4, 6, 3),
        (-36, 4, 8, 1),
        (1532, 1, 7, 4),
        (-478, 1, 9, 2),
        (-268, 2, 6, 4),
        (-1130, 2, 8, 2),
        (8, 2, 10, 0),
        (1440, 3, 7, 2),
        (-12, 3, 9, 0),
        (-264, 4, 6, 2),
        (4, 4, 8, 0),
        (112, 1, 5, 5),
        (-1952, 1, 7, 3),
        (124, 1, 9, 1),
        (-176, 2, 6, 3),
        (528, 2, 8, 1),
        (432, 3, 5, 3),
        (-804, 3, 7, 1),
        (216, 4, 6, 1),
        (-560, 1, 5, 4),
        (1488, 1, 7, 2),
        (-12, 1, 9, 0),
        (16, 2, 4, 4),
        (752, 2, 6, 2),
        (-92, 2, 8, 0),
        (-1296, 3, 5, 2),
        (156, 3, 7, 0),
        (144, 4, 4, 2),
        (-52, 4, 6, 0),
        (1232, 1, 5, 3),
        (-620, 1, 7, 1),
        (-64, 2, 4, 3),
        (-640, 2, 6, 1),
        (-144, 3, 3, 3),
        (1296, 3, 5, 1),
        (-288, 4, 4, 1),
        (-1456, 1, 5, 2),
        (108, 1, 7, 0),
        (80, 2, 4, 2),
        (180, 2, 6, 0),
        (432, 3, 3, 2),
        (-432, 3, 5, 0),
        (-48, 4, 2, 2),
        (144, 4, 4, 0),
        (-144, 1, 3, 3),
        (896, 1, 5, 1),
        (-32, 2, 4, 1),
        (-624, 3, 3, 1),
        (96, 4, 2, 1),
        (432, 1, 3, 2),
        (-224, 1, 5, 0),
        (-80, 2, 2, 2),
        (336, 3, 3, 0),
        (-112, 4, 2, 0),
        (-368, 1, 3, 1),
        (160, 2, 2, 1),
        (96, 3, 1, 1),
        (80, 1, 3, 0),
        (-16, 2, 2, 0),
        (-96, 3, 1, 0),
        (32, 4, 0, 0),
        (-32, 1, 1, 1),
        (32, 1, 1, 0),
        (-32, 2, 0, 0),
    ],
    // a_14
    &[
        (6, 1, 11, 9),
        (-40, 1, 11, 8),
        (17, 2, 10, 8),
        (108, 1, 11, 7),
        (-75, 2, 10, 7),
        (12, 3, 9, 7),
        (1, 0, 10, 8),
        (22, 1, 9, 8),
        (-140, 1, 11, 6),
        (111, 2, 10, 6),
        (-34, 3, 9, 6),
        (1, 4, 8, 6),
        (-5, 0, 10, 7),
        (-136, 1, 9, 7),
        (56, 1, 11, 5),
        (35, 2, 8, 7),
        (-43, 2, 10, 5),
        (10, 3, 9, 5),
        (-4, 4, 8, 5),
        (7, 0, 10, 6),
        (358, 1, 9, 6),
        (84, 1, 11, 4),
        (-199, 2, 8, 6),
        (-15, 2, 10, 4),
        (16, 3, 7, 6),
        (40, 3, 9, 4),
        (6, 4, 8, 4),
        (3, 0, 8, 7),
        (7, 0, 10, 5),
        (16, 1, 7, 7),
        (-464, 1, 9, 5),
        (-140, 1, 11, 3),
        (407, 2, 8, 5),
        (-57, 2, 10, 3),
        (-80, 3, 7, 5),
        (4, 4, 6, 5),
        (-4, 4, 8, 3),
        (-12, 0, 8, 6),
        (-35, 0, 10, 4),
        (-152, 1, 7, 6),
        (170, 1, 9, 4),
        (92, 1, 11, 2),
        (32, 2, 6, 6),
        (-412, 2, 8, 4),
        (125, 2, 10, 2),
        (80, 3, 7, 4),
        (-82, 3, 9, 2),
        (-16, 4, 6, 4),
        (1, 4, 8, 2),
        (1, 0, 8, 5),
        (49, 0, 10, 3),
        (448, 1, 7, 5),
        (328, 1, 9, 3),
        (-30, 1, 11, 1),
        (-228, 2, 6, 5),
        (333, 2, 8, 3),
        (-81, 2, 10, 1),
        (16, 3, 5, 5),
        (-32, 3, 7, 3),
        (74, 3, 9, 1),
        (24, 4, 6, 3),
        (74, 0, 8, 4),
        (-35, 0, 10, 2),
        (-568, 1, 7, 4),
        (-494, 1, 9, 2),
        (4, 1, 11, 0),
        (636, 2, 6, 4),
        (-347, 2, 8, 2),
        (18, 2, 10, 0),
        (-72, 3, 5, 4),
        (176, 3, 7, 2),
        (-20, 3, 9, 0),
        (4, 4, 4, 4),
        (-16, 4, 6, 2),
        (-171, 0, 8, 3),
        (13, 0, 10, 1),
        (-40, 1, 5, 5),
        (112, 1, 7, 3),
        (272, 1, 9, 1),
        (-968, 2, 6, 3),
        (257, 2, 8, 1),
        (192, 3, 5, 3),
        (-272, 3, 7, 1),
        (-24, 4, 4, 3),
        (4, 4, 6, 1),
        (-44, 0, 6, 4),
        (176, 0, 8, 2),
        (-2, 0, 10, 0),
        (224, 1, 5, 4),
        (536, 1, 7, 2),
        (-56, 1, 9, 0),
        (-124, 2, 4, 4),
        (840, 2, 6, 2),
        (-74, 2, 8, 0),
        (-304, 3, 5, 2),
        (112, 3, 7, 0),
        (40, 4, 4, 2),
        (192, 0, 6, 3),
        (-89, 0, 8, 1),
        (-288, 1, 5, 3),
        (-576, 1, 7, 1),
        (544, 2, 4, 3),
        (-372, 2, 6, 1),
        (-64, 3, 3, 3),
        (368, 3, 5, 1),
        (-24, 4, 4, 1),
        (16, 0, 4, 4),
        (-296, 0, 6, 2),
        (18, 0, 8, 0),
        (-80, 1, 5, 2),
        (184, 1, 7, 0),
        (-848, 2, 4, 2),
        (60, 2, 6, 0),
        (192, 3, 3, 2),
        (-200, 3, 5, 0),
        (-16, 4, 2, 2),
        (4, 4, 4, 0),
        (-80, 0, 4, 3),
        (192, 0, 6, 1),
        (328, 1, 5, 1),
        (560, 2, 4, 1),
        (-320, 3, 3, 1),
        (32, 4, 2, 1),
        (192, 0, 4, 2),
        (-44, 0, 6, 0),
        (-144, 1, 5, 0),
        (160, 2, 2, 2),
        (-68, 2, 4, 0),
        (192, 3, 3, 0),
        (-16, 4, 2, 0),
        (-208, 0, 4, 1),
        (-320, 2, 2, 1),
        (96, 3, 1, 1),
        (-48, 0, 2, 2),
        (16, 0, 4, 0),
        (96, 2, 2, 0),
        (-96, 3, 1, 0),
        (16, 4, 0, 0),
        (96, 0, 2, 1),
        (16, 0, 2, 0),
        (-16, 2, 0, 0),
    ],
    // a_15
    &[
        (-4, 1, 11, 9),
        (20, 1, 11, 8),
        (-6, 2, 10, 8),
        (-28, 1, 11, 7),
        (24, 2, 10, 7),
        (-2, 3, 9, 7),
        (-2, 0, 10, 8),
        (-8, 1, 9, 8),
        (-28, 1, 11, 6),
        (-18, 2, 10, 6),
        (6, 3, 9, 6),
        (8, 0, 10, 7),
        (38, 1, 9, 7),
        (140, 1, 11, 5),
        (-12, 2, 8, 7),
        (-60, 2, 10, 5),
        (-6, 0, 10, 6),
        (-18, 1, 9, 6),
        (-196, 1, 11, 4),
        (48, 2, 8, 6),
        (150, 2, 10, 4),
        (-4, 3, 7, 6),
        (-20, 3, 9, 4),
        (-4, 0, 8, 7),
        (-20, 0, 10, 5),
        (-216, 1, 9, 5),
        (140, 1, 11, 3),
        (12, 2, 8, 5),
        (-144, 2, 10, 3),
        (12, 3, 7, 5),
        (30, 3, 9, 3),
        (16, 0, 8, 6),
        (50, 0, 10, 4),
        (-4, 1, 7, 6),
        (580, 1, 9, 4),
        (-52, 1, 11, 2),
        (-312, 2, 8, 4),
        (66, 2, 10, 2),
        (16, 3, 7, 4),
        (-18, 3, 9, 2),
        (4, 0, 8, 5),
        (-48, 0, 10, 3),
        (108, 1, 7, 5),
        (-682, 1, 9, 3),
        (8, 1, 11, 1),
        (588, 2, 8, 3),
        (-12, 2, 10, 1),
        (-88, 3, 7, 3),
        (4, 3, 9, 1),
        (-104, 0, 8, 4),
        (22, 0, 10, 2),
        (-464, 1, 7, 4),
        (422, 1, 9, 2),
        (144, 2, 6, 4),
        (-480, 2, 8, 2),
        (108, 3, 7, 2),
        (196, 0, 8, 3),
        (-4, 0, 10, 1),
        (-32, 1, 5, 5),
        (872, 1, 7, 3),
        (-132, 1, 9, 1),
        (-576, 2, 6, 3),
        (180, 2, 8, 1),
        (48, 3, 5, 3),
        (-52, 3, 7, 1),
        (48, 0, 6, 4),
        (-160, 0, 8, 2),
        (160, 1, 5, 4),
        (-852, 1, 7, 2),
        (16, 1, 9, 0),
        (-48, 2, 4, 4),
        (864, 2, 6, 2),
        (-24, 2, 8, 0),
        (-144, 3, 5, 2),
        (8, 3, 7, 0),
        (-192, 0, 6, 3),
        (60, 0, 8, 1),
        (-400, 1, 5, 3),
        (428, 1, 7, 1),
        (192, 2, 4, 3),
        (-576, 2, 6, 1),
        (-16, 3, 3, 3),
        (144, 3, 5, 1),
        (-16, 0, 4, 4),
        (288, 0, 6, 2),
        (-8, 0, 8, 0),
        (560, 1, 5, 2),
        (-88, 1, 7, 0),
        (-480, 2, 4, 2),
        (144, 2, 6, 0),
        (48, 3, 3, 2),
        (-48, 3, 5, 0),
        (64, 0, 4, 3),
        (-192, 0, 6, 1),
        (48, 1, 3, 3),
        (-400, 1, 5, 1),
        (576, 2, 4, 1),
        (-112, 3, 3, 1),
        (-160, 0, 4, 2),
        (48, 0, 6, 0),
        (-144, 1, 3, 2),
        (112, 1, 5, 0),
        (96, 2, 2, 2),
        (-240, 2, 4, 0),
        (80, 3, 3, 0),
        (192, 0, 4, 1),
        (80, 1, 3, 1),
        (-192, 2, 2, 1),
        (32, 3, 1, 1),
        (32, 0, 2, 2),
        (-80, 0, 4, 0),
        (16, 1, 3, 0),
        (96, 2, 2, 0),
        (-32, 3, 1, 0),
        (-64, 0, 2, 1),
        (32, 1, 1, 1),
        (32, 0, 2, 0),
        (-32, 1, 1, 0),
    ],
    // a_16
    &[
        (1, 1, 11, 9),
        (-3, 1, 11, 8),
        (1, 2, 10, 8),
        (-3, 1, 11, 7),
        (-2, 2, 10, 7),
        (1, 0, 10, 8),
        (21, 1, 11, 6),
        (-5, 2, 10, 6),
        (-2, 0, 10, 7),
        (1, 1, 9, 7),
        (-21, 1, 11, 5),
        (16, 2, 10, 5),
        (-5, 0, 10, 6),
        (-17, 1, 9, 6),
        (-21, 1, 11, 4),
        (-5, 2, 10, 4),
        (16, 0, 10, 5),
        (42, 1, 9, 5),
        (63, 1, 11, 3),
        (-16, 2, 8, 5),
        (-26, 2, 10, 3),
        (-5, 0, 10, 4),
        (8, 1, 7, 6),
        (10, 1, 9, 4),
        (-57, 1, 11, 2),
        (32, 2, 8, 4),
        (37, 2, 10, 2),
        (-16, 0, 8, 5),
        (-26, 0, 10, 3),
        (-24, 1, 7, 5),
        (-155, 1, 9, 3),
        (24, 1, 11, 1),
        (8, 2, 6, 5),
        (32, 2, 8, 3),
        (-20, 2, 10, 1),
        (32, 0, 8, 4),
        (37, 0, 10, 2),
        (-16, 1, 7, 4),
        (219, 1, 9, 2),
        (-4, 1, 11, 0),
        (-16, 2, 6, 4),
        (-128, 2, 8, 2),
        (4, 2, 10, 0),
        (8, 0, 6, 5),
        (32, 0, 8, 3),
        (-20, 0, 10, 1),
        (160, 1, 7, 3),
        (-128, 1, 9, 1),
        (-16, 2, 6, 3),
        (112, 2, 8, 1),
        (-16, 0, 6, 4),
        (-128, 0, 8, 2),
        (4, 0, 10, 0),
        (8, 1, 5, 4),
        (-264, 1, 7, 2),
        (28, 1, 9, 0),
        (128, 2, 6, 2),
        (-32, 2, 8, 0),
        (-16, 0, 6, 3),
        (112, 0, 8, 1),
        (-72, 1, 5, 3),
        (184, 1, 7, 1),
        (-184, 2, 6, 1),
        (128, 0, 6, 2),
        (-32, 0, 8, 0),
        (168, 1, 5, 2),
        (-48, 1, 7, 0),
        (-64, 2, 4, 2),
        (80, 2, 6, 0),
        (-184, 0, 6, 1),
        (16, 1, 3, 3),
        (-88, 1, 5, 1),
        (128, 2, 4, 1),
        (-64, 0, 4, 2),
        (80, 0, 6, 0),
        (-48, 1, 3, 2),
        (-16, 1, 5, 0),
        (16, 2, 2, 2),
        (-64, 2, 4, 0),
        (128, 0, 4, 1),
        (-16, 1, 3, 1),
        (-32, 2, 2, 1),
        (16, 0, 2, 2),
        (-64, 0, 4, 0),
        (48, 1, 3, 0),
        (16, 2, 2, 0),
        (-32, 0, 2, 1),
        (16, 1, 1, 1),
        (16, 0, 2, 0),
        (-16, 1, 1, 0),
    ],
];

/// Coefficients b_0 ..= b_15 (k1 = k).
pub(crate) const G3_TABLE: [&[Term]; 16] = [
    // b_0
    &[
        (-1, 0, 10, 3),
        (3, 0, 10, 2),
        (-4, 0, 10, 1),
        (-2, 0, 8, 2),
        (2, 0, 10, 0),
        (5, 0, 8, 1),
        (-4, 0, 8, 0),
        (-1, 0, 6, 1),
        (2, 0, 6, 0),
    ],
    // b_1
    &[
        (3, 0, 10, 3),
        (-5, 0, 10, 2),
        (2, 0, 10, 1),
        (2, 0, 8, 2),
        (2, 0, 10, 0),
        (-1, 0, 8, 1),
        (-4, 0, 8, 0),
        (-1, 0, 6, 1),
        (2, 0, 6, 0),
    ],
    // b_2
    &[
        (-6, 0, 10, 4),
        (19, 0, 10, 3),
        (-38, 0, 10, 2),
        (-16, 0, 8, 3),
        (35, 0, 10, 1),
        (51, 0, 8, 2),
        (-12, 0, 10, 0),
        (-61, 0, 8, 1),
        (-10, 0, 6, 2),
        (24, 0, 8, 0),
        (26, 0, 6, 1),
        (-12, 0, 6, 0),
    ],
    // b_3
    &[
        (18, 0, 10, 4),
        (-41, 0, 10, 3),
        (36, 0, 10, 2),
        (24, 0, 8, 3),
        (5, 0, 10, 1),
        (-35, 0, 8, 2),
        (-12, 0, 10, 0),
        (-19, 0, 8, 1),
        (-2, 0, 6, 2),
        (24, 0, 8, 0),
        (14, 0, 6, 1),
        (-12, 0, 6, 0),
    ],
    // b_4
    &[
        (-15, 0, 10, 5),
        (47, 0, 10, 4),
        (-124, 0, 10, 3),
        (-50, 0, 8, 4),
        (178, 0, 10, 2),
        (187, 0, 8, 3),
        (-121, 0, 10, 1),
        (-324, 0, 8, 2),
        (30, 0, 10, 0),
        (-39, 0, 6, 3),
        (256, 0, 8, 1),
        (140, 0, 6, 2),
        (-76, 0, 8, 0),
        (-143, 0, 6, 1),
        (62, 0, 6, 0),
        (8, 0, 4, 1),
        (-16, 0, 4, 0),
    ],
    // b_5
    &[
        (45, 0, 10, 5),
        (-129, 0, 10, 4),
        (166, 0, 10, 3),
        (90, 0, 8, 4),
        (-54, 0, 10, 2),
        (-207, 0, 8, 3),
        (-57, 0, 10, 1),
        (76, 0, 8, 2),
        (30, 0, 10, 0),
        (17, 0, 6, 3),
        (116, 0, 8, 1),
        (-4, 0, 6, 2),
        (-76, 0, 8, 0),
        (-67, 0, 6, 1),
        (62, 0, 6, 0),
        (8, 0, 4, 1),
        (-16, 0, 4, 0),
    ],
    // b_6
    &[
        (-20, 0, 10, 6),
        (55, 0, 10, 5),
        (-184, 0, 10, 4),
        (-80, 0, 8, 5),
        (395, 0, 10, 3),
        (329, 0, 8, 4),
        (-424, 0, 10, 2),
        (-757, 0, 8, 3),
        (218, 0, 10, 1),
        (-76, 0, 6, 4),
        (962, 0, 8, 2),
        (-40, 0, 10, 0),
        (360, 0, 6, 3),
        (-614, 0, 8, 1),
        (-616, 0, 6, 2),
        (144, 0, 8, 0),
        (540, 0, 6, 1),
        (56, 0, 4, 2),
        (-168, 0, 6, 0),
        (-144, 0, 4, 1),
        (64, 0, 4, 0),
    ],
    // b_7
    &[
        (60, 0, 10, 6),
        (-205, 0, 10, 5),
        (342, 0, 10, 4),
        (160, 0, 8, 5),
        (-243, 0, 10, 3),
        (-497, 0, 8, 4),
        (-56, 0, 10, 2),
        (485, 0, 8, 3),
        (142, 0, 10, 1),
        (68, 0, 6, 4),
        (22, 0, 8, 2),
        (-40, 0, 10, 0),
        (-188, 0, 6, 3),
        (-346, 0, 8, 1),
        (44, 0, 6, 2),
        (144, 0, 8, 0),
        (300, 0, 6, 1),
        (8, 0, 4, 2),
        (-168, 0, 6, 0),
        (-96, 0, 4, 1),
        (64, 0, 4, 0),
    ],
    // b_8
    &[
        (-15, 0, 10, 7),
        (25, 0, 10, 6),
        (-116, 0, 10, 5),
        (-70, 0, 8, 6),
        (426, 0, 10, 4),
        (291, 0, 8, 5),
        (-691, 0, 10, 3),
        (-844, 0, 8, 4),
        (563, 0, 10, 2),
        (-79, 0, 6, 5),
        (1604, 0, 8, 3),
        (-222, 0, 10, 1),
        (466, 0, 6, 4),
        (-1694, 0, 8, 2),
        (30, 0, 10, 0),
        (-1130, 0, 6, 3),
        (885, 0, 8, 1),
        (1624, 0, 6, 2),
        (-156, 0, 8, 0),
        (136, 0, 4, 3),
        (-1127, 0, 6, 1),
        (-496, 0, 4, 2),
        (254, 0, 6, 0),
        (480, 0, 4, 1),
        (-160, 0, 4, 0),
        (-16, 0, 2, 1),
        (32, 0, 2, 0),
    ],
    // b_9
    &[
        (45, 0, 10, 7),
        (-175, 0, 10, 6),
        (358, 0, 10, 5),
        (150, 0, 8, 6),
        (-390, 0, 10, 4),
        (-583, 0, 8, 5),
        (73, 0, 10, 3),
        (868, 0, 8, 4),
        (227, 0, 10, 2),
        (97, 0, 6, 5),
        (-460, 0, 8, 3),
        (-168, 0, 10, 1),
        (-430, 0, 6, 4),
        (-402, 0, 8, 2),
        (30, 0, 10, 0),
        (542, 0, 6, 3),
        (583, 0, 8, 1),
        (200, 0, 6, 2),
        (-156, 0, 8, 0),
        (-72, 0, 4, 3),
        (-687, 0, 6, 1),
        (-48, 0, 4, 2),
        (254, 0, 6, 0),
        (304, 0, 4, 1),
        (-160, 0, 4, 0),
        (-32, 0, 2, 1),
        (32, 0, 2, 0),
    ],
    // b_10
    &[
        (-6, 0, 10, 8),
        (-7, 0, 10, 7),
        (2, 0, 10, 6),
        (-32, 0, 8, 7),
        (205, 0, 10, 5),
        (109, 0, 8, 6),
        (-558, 0, 10, 4),
        (-399, 0, 8, 5),
        (667, 0, 10, 3),
        (-42, 0, 6, 6),
        (1224, 0, 8, 4),
        (-418, 0, 10, 2),
        (290, 0, 6, 5),
        (-2024, 0, 8, 3),
        (127, 0, 10, 1),
        (-904, 0, 6, 4),
        (1755, 0, 8, 2),
        (-12, 0, 10, 0),
        (1980, 0, 6, 3),
        (-721, 0, 8, 1),
        (136, 0, 4, 4),
        (-2370, 0, 6, 2),
        (88, 0, 8, 0),
        (-680, 0, 4, 3),
        (1314, 0, 6, 1),
        (1152, 0, 4, 2),
        (-204, 0, 6, 0),
        (-928, 0, 4, 1),
        (-80, 0, 2, 2),
        (192, 0, 4, 0),
        (208, 0, 2, 1),
        (-64, 0, 2, 0),
    ],
    // b_11
    &[
        (18, 0, 10, 8),
        (-75, 0, 10, 7),
        (184, 0, 10, 6),
        (72, 0, 8, 7),
        (-285, 0, 10, 5),
        (-333, 0, 8, 6),
        (162, 0, 10, 4),
        (655, 0, 8, 5),
        (143, 0, 10, 3),
        (62, 0, 6, 6),
        (-664, 0, 8, 4),
        (-240, 0, 10, 2),
        (-370, 0, 6, 5),
        (-16, 0, 8, 3),
        (105, 0, 10, 1),
        (752, 0, 6, 4),
        (725, 0, 8, 2),
        (-12, 0, 10, 0),
        (-356, 0, 6, 3),
        (-527, 0, 8, 1),
        (-136, 0, 4, 4),
        (-674, 0, 6, 2),
        (88, 0, 8, 0),
        (232, 0, 4, 3),
        (854, 0, 6, 1),
        (176, 0, 4, 2),
        (-204, 0, 6, 0),
        (-592, 0, 4, 1),
        (-32, 0, 2, 2),
        (192, 0, 4, 0),
        (160, 0, 2, 1),
        (-64, 0, 2, 0),
    ],
    // b_12
    &[
        (-1, 0, 10, 9),
        (-11, 0, 10, 8),
        (36, 0, 10, 7),
        (-6, 0, 8, 8),
        (18, 0, 10, 6),
        (-3, 0, 8, 7),
        (-206, 0, 10, 5),
        (-12, 0, 8, 6),
        (367, 0, 10, 4),
        (-9, 0, 6, 7),
        (348, 0, 8, 5),
        (-328, 0, 10, 3),
        (64, 0, 6, 6),
        (-1038, 0, 8, 4),
        (160, 0, 10, 2),
        (-239, 0, 6, 5),
        (1385, 0, 8, 3),
        (-37, 0, 10, 1),
        (914, 0, 6, 4),
        (-948, 0, 8, 2),
        (2, 0, 10, 0),
        (48, 0, 4, 5),
        (-1839, 0, 6, 3),
        (294, 0, 8, 1),
        (-336, 0, 4, 4),
        (1820, 0, 6, 2),
        (-20, 0, 8, 0),
        (904, 0, 4, 3),
        (-777, 0, 6, 1),
        (-1392, 0, 4, 2),
        (66, 0, 6, 0),
        (-96, 0, 2, 3),
        (856, 0, 4, 1),
        (400, 0, 2, 2),
        (-80, 0, 4, 0),
        (-352, 0, 2, 1),
        (32, 0, 2, 0),
        (16, 0, 0, 1),
    ],
    // b_13
    &[
        (3, 0, 10, 9),
        (-11, 0, 10, 8),
        (34, 0, 10, 7),
        (14, 0, 8, 8),
        (-86, 0, 10, 6),
        (-73, 0, 8, 7),
        (94, 0, 10, 5),
        (180, 0, 8, 6),
        (23, 0, 10, 4),
        (15, 0, 6, 7),
        (-296, 0, 8, 5),
        (-138, 0, 10, 3),
        (-112, 0, 6, 6),
        (158, 0, 8, 4),
        (112, 0, 10, 2),
        (317, 0, 6, 5),
        (323, 0, 8, 3),
        (-33, 0, 10, 1),
        (-350, 0, 6, 4),
        (-516, 0, 8, 2),
        (2, 0, 10, 0),
        (-64, 0, 4, 5),
        (-143, 0, 6, 3),
        (230, 0, 8, 1),
        (208, 0, 4, 4),
        (732, 0, 6, 2),
        (-20, 0, 8, 0),
        (-120, 0, 4, 3),
        (-525, 0, 6, 1),
        (-400, 0, 4, 2),
        (66, 0, 6, 0),
        (48, 0, 2, 3),
        (520, 0, 4, 1),
        (48, 0, 2, 2),
        (-80, 0, 4, 0),
        (-240, 0, 2, 1),
        (32, 0, 2, 0),
        (48, 0, 0, 1),
    ],
    // b_14
    &[
        (-3, 0, 10, 9),
        (12, 0, 10, 8),
        (-11, 0, 10, 7),
        (-9, 0, 8, 8),
        (-24, 0, 10, 6),
        (33, 0, 8, 7),
        (75, 0, 10, 5),
        (-2, 0, 8, 6),
        (-92, 0, 10, 4),
        (-4, 0, 6, 7),
        (-170, 0, 8, 5),
        (63, 0, 10, 3),
        (20, 0, 6, 6),
        (371, 0, 8, 4),
        (-24, 0, 10, 2),
        (80, 0, 6, 5),
        (-379, 0, 8, 3),
        (4, 0, 10, 1),
        (-424, 0, 6, 4),
        (200, 0, 8, 2),
        (-24, 0, 4, 5),
        (716, 0, 6, 3),
        (-44, 0, 8, 1),
        (152, 0, 4, 4),
        (-556, 0, 6, 2),
        (-504, 0, 4, 3),
        (168, 0, 6, 1),
        (-16, 0, 2, 4),
        (648, 0, 4, 2),
        (128, 0, 2, 3),
        (-272, 0, 4, 1),
        (-304, 0, 2, 2),
        (192, 0, 2, 1),
        (48, 0, 0, 2),
        (-48, 0, 0, 1),
    ],
    // b_15
    &[
        (1, 0, 10, 9),
        (-2, 0, 10, 8),
        (-5, 0, 10, 7),
        (1, 0, 8, 8),
        (16, 0, 10, 6),
        (-1, 0, 8, 7),
        (-5, 0, 10, 5),
        (-22, 0, 8, 6),
        (-26, 0, 10, 4),
        (42, 0, 8, 5),
        (37, 0, 10, 3),
        (8, 0, 6, 6),
        (37, 0, 8, 4),
        (-20, 0, 10, 2),
        (-32, 0, 6, 5),
        (-149, 0, 8, 3),
        (4, 0, 10, 1),
        (128, 0, 8, 2),
        (8, 0, 4, 5),
        (176, 0, 6, 3),
        (-36, 0, 8, 1),
        (-8, 0, 4, 4),
        (-264, 0, 6, 2),
        (-88, 0, 4, 3),
        (112, 0, 6, 1),
        (232, 0, 4, 2),
        (16, 0, 2, 3),
        (-144, 0, 4, 1),
        (-96, 0, 2, 2),
        (80, 0, 2, 1),
        (16, 0, 0, 2),
        (-16, 0, 0, 1),
    ],
];
