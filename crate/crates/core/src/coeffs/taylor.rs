//! Maclaurin data for the fitted weights `b_1..b_6` of each phase-fitted
//! method, as coefficients of ascending powers of `v^2`.
//!
//! Entry `[i][j]` holds the series for weight `b_{j+1}` of the method whose
//! phase-lag function has `i` vanishing derivatives at the fitted frequency.
//! The constant term of every series is the corresponding classical weight,
//! which is what makes the small-`v` branch collapse onto the classical
//! method as `v -> 0`. Terms are exact rationals; series are truncated after
//! the `v^8` term (`v^10` where one more term was needed to hold the
//! branch-matching accuracy), giving a truncation error well below 1e-14
//! over the whole `|v| <= 0.05` domain of the Taylor branch.

/// `TAYLOR[i][j][k] = (num, den)` of the `v^(2k)` term of `b_{j+1}` for
/// fitting order `i`.
pub(crate) static TAYLOR: [[&[(i64, i64)]; 6]; 6] = [
    // 0 vanishing phase-lag derivatives at the fitted frequency
    [
        &[(90987349, 53222400), (-16301796103, 290594304000), (2012122579, 581188608000), (-48410309, 1184440320000), (991945331743, 2838385676206080000)],
        &[(-114798419, 26611200), (16301796103, 29059430400), (-2012122579, 58118860800), (48410309, 118444032000), (-991945331743, 283838567620608000)],
        &[(270875723, 17740800), (-16301796103, 6457651200), (2012122579, 12915302400), (-48410309, 26320896000), (991945331743, 63075237249024000)],
        &[(-67855831, 2217600), (16301796103, 2421619200), (-2012122579, 4843238400), (48410309, 9870336000), (-991945331743, 23653213968384000)],
        &[(50277247, 985600), (-16301796103, 1383782400), (2012122579, 2767564800), (-48410309, 5640192000), (991945331743, 13516122267648000)],
        &[(-253491379, 4435200), (16301796103, 1153152000), (-2012122579, 2306304000), (48410309, 4700160000), (-991945331743, 11263435223040000)],
    ],
    // 1 vanishing phase-lag derivatives at the fitted frequency
    [
        &[(90987349, 53222400), (-16301796103, 145297152000), (1532031563, 268240896000), (-31987133939, 592812380160000), (5466168990203, 2838385676206080000)],
        &[(-114798419, 26611200), (16301796103, 14529715200), (-28198975459, 249080832000), (88492028011, 11856247603200), (-533071354889581, 1419192838103040000)],
        &[(270875723, 17740800), (-16301796103, 3228825600), (117200518583, 166053888000), (-2285150767769, 39520825344000), (308808361613933, 105125395415040000)],
        &[(-67855831, 2217600), (16301796103, 1210809600), (-36423021893, 16144128000), (989757481543, 4940103168000), (-1207392034807669, 118266069841920000)],
        &[(50277247, 985600), (-16301796103, 691891200), (360410789243, 83026944000), (-25035151487, 62731468800), (125088382253381, 6143691939840000), (-2919882783787129, 4460320348323840000)],
        &[(-253491379, 4435200), (16301796103, 576576000), (-222767191987, 41513472000), (3516569786117, 7057290240000), (-95477706318691, 3754478407680000)],
    ],
    // 2 vanishing phase-lag derivatives at the fitted frequency
    [
        &[(90987349, 53222400), (-16301796103, 96864768000), (1568734969, 232475443200), (-112423833619, 889218570240000), (-128168340031, 189225711747072000)],
        &[(-114798419, 26611200), (16301796103, 9686476800), (-10540703911, 44706816000), (871935134531, 44460928512000), (-463103326062011, 473064279367680000)],
        &[(270875723, 17740800), (-16301796103, 2152550400), (639312597971, 387459072000), (-2472777112313, 11856247603200), (58110459403753, 3185618042880000)],
        &[(-67855831, 2217600), (16301796103, 807206400), (-89147839889, 16144128000), (1282661397349, 1482030950400), (-3541527647083319, 39422023280640000)],
        &[(50277247, 985600), (-16301796103, 461260800), (300047111873, 27675648000), (-18727460555953, 9880206336000), (4749826752625121, 22526870446080000)],
        &[(-253491379, 4435200), (16301796103, 384384000), (-37309797113, 2767564800), (90333884682737, 37050773760000), (-69221174089601, 250298560512000)],
    ],
    // 3 vanishing phase-lag derivatives at the fitted frequency
    [
        &[(90987349, 53222400), (-16301796103, 72648576000), (1273143229, 193729536000), (-421960559, 1221454080000), (-124506164597657, 5676771352412160000)],
        &[(-114798419, 26611200), (16301796103, 7264857600), (-38969308351, 96864768000), (5604849953, 158789030400), (-5242236508523657, 2838385676206080000)],
        &[(270875723, 17740800), (-16301796103, 1614412800), (578948920601, 193729536000), (-733132845253, 1482030950400), (3064860132866873, 57341124771840000)],
        &[(-67855831, 2217600), (16301796103, 605404800), (-247322293877, 24216192000), (844539338551, 370507737600), (-80127849554001773, 236532139683840000)],
        &[(50277247, 985600), (-16301796103, 345945600), (279925886083, 13837824000), (-644885438797, 123502579200), (122198747647321067, 135161222676480000)],
        &[(-253491379, 4435200), (16301796103, 288288000), (-1220113637, 48384000), (55089606671, 8096760000), (-1634963205351829, 1325110026240000)],
    ],
    // 4 vanishing phase-lag derivatives at the fitted frequency
    [
        &[(90987349, 53222400), (-16301796103, 58118860800), (451826777, 87178291200), (-567827928197, 711374856192000), (-7456559915267, 87334943883264000)],
        &[(-114798419, 26611200), (16301796103, 5811886080), (-53423656079, 87178291200), (3768047264957, 71137485619200), (-1807362562020419, 567677135241216000)],
        &[(270875723, 17740800), (-16301796103, 1291530240), (137191770479, 29059430400), (-6482264498201, 6774998630400), (177746918811101, 1557413265408000)],
        &[(-67855831, 2217600), (16301796103, 484323840), (-4393734833, 269068800), (3998343544387, 846874828800), (-42449166474915191, 47306427936768000)],
        &[(50277247, 985600), (-16301796103, 276756480), (9638045471, 296524800), (-87748735805873, 7904165068800), (70694795981650949, 27032244535296000)],
        &[(-253491379, 4435200), (16301796103, 230630400), (-84219941177, 2075673600), (863717128805537, 59281238016000), (-1830923526668191, 500597121024000)],
    ],
    // 5 vanishing phase-lag derivatives at the fitted frequency
    [
        &[(90987349, 53222400), (-16301796103, 48432384000), (3000167803, 1162377216000), (-2795461105681, 1778437140480000), (-423149542577683, 1892257117470720000)],
        &[(-114798419, 26611200), (16301796103, 4843238400), (-9164631311, 10567065600), (1149042063431, 16167610368000), (-1015140295561079, 189225711747072000)],
        &[(270875723, 17740800), (-16301796103, 1076275200), (106131595741, 15498362880), (-193910381341843, 118562476032000), (12701953007551, 62296530616320)],
        &[(-67855831, 2217600), (16301796103, 403603200), (-15415020883, 645765120), (125531790304181, 14820309504000), (-361081038637727, 185515403673600)],
        &[(50277247, 985600), (-16301796103, 230630400), (263828905451, 5535129600), (-400330948542829, 19760412672000), (54441481708734389, 9010748178432000)],
        &[(-253491379, 4435200), (16301796103, 192192000), (-117727186937, 1976832000), (3958504514434801, 148203095040000), (-7164842887862063, 834328535040000)],
    ],
];
