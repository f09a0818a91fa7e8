"""Digitized published comparison tables for the eight bundled cases.

Sixteen tables, two per case: velocity then temperature, at eta = 0(0.1)1.
Velocity rows carry (eta, hpm, numeric, ohpm, err); the hpm column is a
static earlier-method reference present only for the pi/24 cases.  Thermal
rows carry (eta, numeric, ohpm, err).  The err column is the published
absolute deviation |numeric - ohpm| and is kept for cross-checks.
"""

from __future__ import annotations

__all__ = ["VELOCITY_TABLES", "THERMAL_TABLES", "TABLES", "MissingTableData", "get_table", "tables_for_case"]


class MissingTableData(LookupError):
    """A table number or bundled column was requested that does not exist."""


VELOCITY_TABLES = {
    1: {
        "case": "5.1",
        "rows": [
            (0.0, 1.0, 1.0, 1.0, 0.0),
            (0.1, 0.9770711, 0.9771426047, 0.9771444959, 1.8e-6),
            (0.2, 0.9112020, 0.9114792278, 0.9114802054, 9.7e-7),
            (0.3, 0.8104115, 0.8110052403, 0.8110054657, 2.2e-7),
            (0.4, 0.6859230, 0.6869148220, 0.6869163034, 1.4e-6),
            (0.5, 0.5498427, 0.5512883212, 0.5512895302, 1.2e-6),
            (0.6, 0.4131698, 0.4151088947, 0.4151091740, 2.7e-7),
            (0.7, 0.2846024, 0.2870546320, 0.2870554998, 8.6e-7),
            (0.8, 0.1702791, 0.1731221390, 0.1731231521, 1.01e-6),
            (0.9, 0.0744232, 0.0768715756, 0.0768721058, 5.3e-7),
            (1.0, 0.0, 0.0, 0.0, 0.0),
        ],
    },
    3: {
        "case": "5.2",
        "rows": [
            (0.0, 1.0, 1.0, 1.0, 0.0),
            (0.1, 0.9837340, 0.9837367791, 0.9837369246, 1.4e-7),
            (0.2, 0.9363350, 0.9363459948, 0.9363459260, 6.8e-8),
            (0.3, 0.8616894, 0.8617133581, 0.8617132189, 1.3e-7),
            (0.4, 0.7653405, 0.7653814753, 0.7653813980, 7.7e-8),
            (0.5, 0.6533961, 0.6534573087, 0.6534570226, 2.8e-7),
            (0.6, 0.5314621, 0.5315466609, 0.5315462975, 3.6e-7),
            (0.7, 0.4038130, 0.4039227354, 0.4039224205, 3.1e-7),
            (0.8, 0.2728708, 0.2729980317, 0.2729975130, 5.1e-7),
            (0.9, 0.1389433, 0.1390416079, 0.1390411070, 5.0e-7),
            (1.0, 0.0, 0.0, 0.0, 0.0),
        ],
    },
    5: {
        "case": "5.3",
        "rows": [
            (0.0, 1.0, 1.0, 1.0, 0.0),
            (0.1, 0.9883197, 0.9883196668, 0.9883207994, 1.1e-6),
            (0.2, 0.9537955, 0.9537952479, 0.9538026351, 7.3e-6),
            (0.3, 0.8978515, 0.8978510438, 0.8978610430, 9.9e-6),
            (0.4, 0.8224699, 0.8224690439, 0.8224696000, 5.5e-7),
            (0.5, 0.7296817, 0.7296803425, 0.7296719365, 8.4e-6),
            (0.6, 0.6209748, 0.6209728597, 0.6209706881, 2.1e-6),
            (0.7, 0.4966644, 0.4966617866, 0.4966700156, 8.2e-6),
            (0.8, 0.3552115, 0.3552079113, 0.3552097261, 1.8e-6),
            (0.9, 0.1923821, 0.1923775215, 0.1923683642, 9.1e-6),
            (1.0, 0.0, 0.0, 0.0, 0.0),
        ],
    },
    7: {
        "case": "5.4",
        "rows": [
            (0.0, 1.0, 1.0, 1.0, 0.0),
            (0.1, 0.9937607, 0.9937611413, 0.9937578349, 3.3e-6),
            (0.2, 0.9747886, 0.9747905377, 0.9747871858, 3.3e-6),
            (0.3, 0.9422794, 0.9422838643, 0.9422837661, 9.8e-8),
            (0.4, 0.8947431, 0.8947513541, 0.8947499642, 1.3e-6),
            (0.5, 0.8297471, 0.8297605618, 0.8297564399, 4.1e-6),
            (0.6, 0.7434756, 0.7434959928, 0.7434941281, 1.8e-6),
            (0.7, 0.6299866, 0.6300164190, 0.6300167936, 3.7e-7),
            (0.8, 0.4799338, 0.4799757286, 0.4799724842, 3.2e-6),
            (0.9, 0.2782789, 0.2783297889, 0.2783280591, 1.7e-6),
            (1.0, 0.0, 0.0, 0.0, 0.0),
        ],
    },
    9: {
        "case": "5.5",
        "rows": [
            (0.0, None, 1.0, 1.0, 0.0),
            (0.1, None, 0.9824312364, 0.9824320701, 8.3e-7),
            (0.2, None, 0.9312259577, 0.9312265466, 5.8e-7),
            (0.3, None, 0.8506106161, 0.8506107339, 1.1e-7),
            (0.4, None, 0.7467908018, 0.7467915008, 6.9e-7),
            (0.5, None, 0.6269481682, 0.6269490072, 8.3e-7),
            (0.6, None, 0.4982344464, 0.4982347463, 2.9e-7),
            (0.7, None, 0.3669663386, 0.3669668037, 4.6e-7),
            (0.8, None, 0.2381237463, 0.2381245686, 8.2e-7),
            (0.9, None, 0.1151519312, 0.1151523953, 4.6e-7),
            (1.0, None, 0.0, 0.0, 0.0),
        ],
    },
    11: {
        "case": "5.6",
        "rows": [
            (0.0, None, 1.0, 1.0, 0.0),
            (0.1, None, 0.9849746347, 0.9849746827, 4.8e-8),
            (0.2, None, 0.9409030596, 0.9409030371, 2.2e-8),
            (0.3, None, 0.8706210985, 0.8706210491, 4.9e-8),
            (0.4, None, 0.7783094304, 0.7783094038, 2.6e-8),
            (0.5, None, 0.6688194854, 0.6688193877, 9.7e-8),
            (0.6, None, 0.5469607278, 0.5469605971, 1.3e-7),
            (0.7, None, 0.4168757453, 0.4168756336, 1.1e-7),
            (0.8, None, 0.2815737222, 0.2815735380, 1.8e-7),
            (0.9, None, 0.1426291045, 0.1426289244, 1.8e-7),
            (1.0, None, 0.0, 0.0, 0.0),
        ],
    },
    13: {
        "case": "5.7",
        "rows": [
            (0.0, None, 1.0, 1.0, 0.0),
            (0.1, None, 0.9871108049, 0.9871108182, 1.3e-8),
            (0.2, None, 0.9490642316, 0.9490642266, 5.0e-9),
            (0.3, None, 0.8876104540, 0.8876104486, 5.3e-9),
            (0.4, None, 0.8053144512, 0.8053144616, 1.03e-8),
            (0.5, None, 0.7051032297, 0.7051032241, 5.5e-9),
            (0.6, None, 0.5897534597, 0.5897534552, 4.4e-9),
            (0.7, None, 0.4613867287, 0.4613867398, 1.1e-8),
            (0.8, None, 0.3210064088, 0.3210063961, 1.2e-8),
            (0.9, None, 0.1680649652, 0.1680649814, 1.6e-8),
            (1.0, None, 0.0, 0.0, 0.0),
        ],
    },
    15: {
        "case": "5.8",
        "rows": [
            (0.0, None, 1.0, 1.0, 0.0),
            (0.1, None, 0.9904272110, 0.9904271107, 1.003e-7),
            (0.2, None, 0.9618100677, 0.9618099299, 1.3e-7),
            (0.3, None, 0.9144036356, 0.9144036639, 2.8e-8),
            (0.4, None, 0.8484736891, 0.8484737167, 2.7e-8),
            (0.5, None, 0.7640642211, 0.7640640849, 1.3e-7),
            (0.6, None, 0.6606772356, 0.6606771839, 5.1e-8),
            (0.7, None, 0.5368520578, 0.5368521821, 1.2e-7),
            (0.8, None, 0.3896018441, 0.3896017829, 6.1e-8),
            (0.9, None, 0.2136111325, 0.2136111294, 3.1e-9),
            (1.0, None, 0.0, 0.0, 0.0),
        ],
    },
}

THERMAL_TABLES = {
    2: {
        "case": "5.1",
        "rows": [
            (0.0, -9.134405103300e-12, -9.134559900000e-12, 1.5e-16),
            (0.1, -8.553981690585e-12, -8.561731325450e-12, 7.7e-15),
            (0.2, -7.029011445513e-12, -7.029011445531e-12, 1.7e-23),
            (0.3, -4.968059593695e-12, -4.959904647105e-12, 8.1e-15),
            (0.4, -2.830354806908e-12, -2.830354806921e-12, 1.3e-23),
            (0.5, -1.003581673783e-12, -1.015625108634e-12, 1.2e-14),
            (0.6, 2.755715234490e-13, 2.755715234410e-13, 7.9e-24),
            (0.7, 9.398183452650e-13, 9.682947296376e-13, 2.8e-14),
            (0.8, 1.062337244632e-12, 1.062337244629e-12, 3.3e-24),
            (0.9, 7.684282928672e-13, 6.524090716991e-13, 1.1e-13),
            (1.0, 0.0, 0.0, 0.0),
        ],
    },
    4: {
        "case": "5.2",
        "rows": [
            (0.0, -8.520036945014e-10, -8.520036944914e-10, 9.9e-21),
            (0.1, -8.394493067234e-10, -8.395974340239e-10, 1.4e-13),
            (0.2, -8.032504411694e-10, -8.032504411616e-10, 7.8e-21),
            (0.3, -7.450795118612e-10, -7.450297754118e-10, 4.9e-14),
            (0.4, -6.677062404515e-10, -6.677062404494e-10, 2.1e-21),
            (0.5, -5.746573136109e-10, -5.746735798562e-10, 1.6e-14),
            (0.6, -4.698328124476e-10, -4.698328124489e-10, 1.3e-21),
            (0.7, -3.570882806332e-10, -3.571240799348e-10, 3.5e-14),
            (0.8, -2.398013591946e-10, -2.398013591937e-10, 9.8e-22),
            (0.9, -1.206024561793e-10, -1.200670094842e-10, 5.3e-13),
            (1.0, 0.0, 0.0, 0.0),
        ],
    },
    6: {
        "case": "5.3",
        "rows": [
            (0.0, -1.783303641361e-9, -1.783303641351e-9, 9.9e-21),
            (0.1, -1.753016328789e-9, -1.753373570315e-9, 3.5e-13),
            (0.2, -1.666810282194e-9, -1.666810282186e-9, 7.8e-21),
            (0.3, -1.531366088677e-9, -1.531258066872e-9, 1.08e-13),
            (0.4, -1.356325163065e-9, -1.356325163062e-9, 2.1e-21),
            (0.5, -1.152391353408e-9, -1.152436518900e-9, 4.5e-14),
            (0.6, -9.301091200084e-10, -9.301091200095e-10, 1.1e-21),
            (0.7, -6.989817680976e-10, -6.987973346248e-10, 1.8e-13),
            (0.8, -4.652100850091e-10, -4.652100850080e-10, 1.1e-21),
            (0.9, -2.319273360260e-10, -2.321569863571e-10, 2.2e-13),
            (1.0, 0.0, 0.0, 0.0),
        ],
    },
    8: {
        "case": "5.4",
        "rows": [
            (0.0, -3.885903481818e-9, -3.885903481801e-9, 1.7e-20),
            (0.1, -3.804390715058e-9, -3.805365047292e-9, 9.7e-13),
            (0.2, -3.575104095175e-9, -3.575104095175e-9, 5.7e-23),
            (0.3, -3.222962704714e-9, -3.222630117770e-9, 3.3e-13),
            (0.4, -2.782964569511e-9, -2.782964569511e-9, 4.4e-23),
            (0.5, -2.293213461698e-9, -2.293504856351e-9, 2.9e-13),
            (0.6, -1.790055410191e-9, -1.790055410191e-9, 3.5e-23),
            (0.7, -1.302936492610e-9, -1.301687731203e-9, 1.2e-12),
            (0.8, -8.442618285524e-10, -8.442618285525e-10, 1.4e-23),
            (0.9, -4.107432220830e-10, -4.158108458702e-10, 5.06e-12),
            (1.0, 0.0, 0.0, 0.0),
        ],
    },
    10: {
        "case": "5.5",
        "rows": [
            (0.0, -2.552530215568e-11, -2.552530214568e-11, 9.9e-21),
            (0.1, -2.442980325655e-11, -2.444079060328e-11, 1.09e-14),
            (0.2, -2.143998685224e-11, -2.143998685224e-11, 1.9e-25),
            (0.3, -1.714518106214e-11, -1.713385692946e-11, 1.1e-14),
            (0.4, -1.227729149275e-11, -1.227729149275e-11, 1.3e-25),
            (0.5, -7.579058130819e-12, -7.588196380463e-12, 9.1e-15),
            (0.6, -3.636709774083e-12, -3.636709774083e-12, 1.6e-25),
            (0.7, -8.316369531201e-13, -8.099883012752e-13, 2.1e-14),
            (0.8, 6.930669117891e-13, 6.930669117890e-13, 7.8e-26),
            (0.9, 9.721365514984e-13, 8.898023093848e-13, 8.2e-14),
            (1.0, 0.0, 0.0, 0.0),
        ],
    },
    12: {
        "case": "5.6",
        "rows": [
            (0.0, -3.397742006028e-9, -3.397742006018e-9, 9.9e-21),
            (0.1, -3.346638363267e-9, -3.347192325339e-9, 5.5e-13),
            (0.2, -3.199501303768e-9, -3.199501303768e-9, 1.9e-22),
            (0.3, -2.964278501171e-9, -2.964072110215e-9, 2.06e-13),
            (0.4, -2.653181572584e-9, -2.653181572584e-9, 6.7e-23),
            (0.5, -2.281170448213e-9, -2.281224162207e-9, 5.3e-14),
            (0.6, -1.864037686164e-9, -1.864037686164e-9, 1.4e-23),
            (0.7, -1.416766717489e-9, -1.416988166987e-9, 2.2e-13),
            (0.8, -9.521674889800e-10, -9.521674889800e-10, 2.8e-24),
            (0.9, -4.798620033623e-10, -4.772452449206e-10, 2.6e-12),
            (1.0, 0.0, 0.0, 0.0),
        ],
    },
    14: {
        "case": "5.7",
        "rows": [
            (0.0, -6.861779213872e-9, -6.861779213862e-9, 9.9e-21),
            (0.1, -6.756689795935e-9, -6.757837516749e-9, 1.1e-12),
            (0.2, -6.454596023395e-9, -6.454596023395e-9, 1.4e-23),
            (0.3, -5.973076729675e-9, -5.972618579646e-9, 4.5e-13),
            (0.4, -5.338639377096e-9, -5.338639377096e-9, 5.7e-24),
            (0.5, -4.583265280198e-9, -4.583356882876e-9, 9.1e-14),
            (0.6, -3.739726496008e-9, -3.739726496008e-9, 6.6e-24),
            (0.7, -2.838920429095e-9, -2.839180849233e-9, 2.6e-13),
            (0.8, -1.906149341683e-9, -1.906149341683e-9, 5.7e-24),
            (0.9, -9.597066242185e-10, -9.553857275377e-10, 4.3e-12),
            (1.0, 0.0, 0.0, 0.0),
        ],
    },
    16: {
        "case": "5.8",
        "rows": [
            (0.0, -1.406496797937e-8, -1.406496797936e-8, 9.9e-21),
            (0.1, -1.383991714524e-8, -1.384237616580e-8, 2.4e-12),
            (0.2, -1.319483359510e-8, -1.319483359510e-8, 8.2e-24),
            (0.3, -1.217244871718e-8, -1.217139646331e-8, 1.05e-12),
            (0.4, -1.083591345359e-8, -1.083591345359e-8, 1.1e-23),
            (0.5, -9.260353523538e-9, -9.260364501045e-9, 1.09e-14),
            (0.6, -7.519751014022e-9, -7.519751014022e-9, 4.9e-24),
            (0.7, -5.683228753360e-9, -5.683311365697e-9, 8.2e-14),
            (0.8, -3.802282135607e-9, -3.802282135607e-9, 3.3e-24),
            (0.9, -1.908111552553e-9, -1.902733734257e-9, 5.3e-12),
            (1.0, 0.0, 0.0, 0.0),
        ],
    },
}

# number -> (problem, payload); velocity tables are the odd numbers.
TABLES = {
    **{n: ("velocity", t) for n, t in VELOCITY_TABLES.items()},
    **{n: ("thermal", t) for n, t in THERMAL_TABLES.items()},
}


def get_table(number: int) -> tuple[str, dict]:
    """(problem, payload) for a table number in 1..16."""
    try:
        return TABLES[number]
    except KeyError:
        raise MissingTableData(f"no bundled table numbered {number}") from None


def tables_for_case(case_id: str) -> tuple[int, int]:
    """(velocity_table_number, thermal_table_number) for a bundled case id."""
    velocity = {t["case"]: n for n, t in VELOCITY_TABLES.items()}
    thermal = {t["case"]: n for n, t in THERMAL_TABLES.items()}
    if case_id not in velocity:
        raise MissingTableData(f"no bundled tables for case {case_id!r}")
    return velocity[case_id], thermal[case_id]
