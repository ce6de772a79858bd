//! Extended-precision closed forms for the fitted weights `b_1..b_6`.
//!
//! Every expression here is a ratio of trigonometric polynomials in the
//! frequency parameter `v` whose terms cancel almost completely: the
//! intermediates carry factors like `csc(v/2)^10 ~ (v/2)^-10` while the
//! result stays O(10), so a direct double evaluation loses 10 or more
//! digits already at `v = 0.5` and everything below `v = 0.05` is noise.
//! All arithmetic therefore runs on [`BigFloat`]; callers round once at
//! the end. Poles at `v = 0 (mod 2pi)` (`csc(v/2)`) are excluded by the
//! caller. The interior zeros at `v = pi` (`cos(v/2)`, `sin v`,
//! `1 + cos v`) are removable for fitting order 0 but genuine for orders
//! 1..=5: there the defining linear system itself is singular and the
//! fitted weights really diverge. Extended precision keeps the evaluation
//! faithful on both sides of that distinction.

use crate::bigfloat::BigFloat;

/// Shared trig values at `v`: multiples of the full and half angle plus
/// the reciprocal combinations the weight formulas use.
pub(crate) struct Trig {
    cos_kv: Vec<BigFloat>,
    sin_kv: Vec<BigFloat>,
    cos_khalf: Vec<BigFloat>,
    sin_half: BigFloat,
    cos_half: BigFloat,
    csc_half: BigFloat,
    sec_half: BigFloat,
    tan_half: BigFloat,
    cot_half: BigFloat,
    csc_full: BigFloat,
}

impl Trig {
    /// One Maclaurin evaluation at `v/2`; every other entry follows from
    /// the angle-addition and Chebyshev recurrences, which only compound
    /// the 384-bit rounding linearly in the multiple.
    pub(crate) fn new(v: &BigFloat) -> Self {
        let (sin_half, cos_half) = (v / 2).sin_cos();
        let sv = 2 * (&sin_half * &cos_half);
        let cv = 1 - 2 * (&sin_half * &sin_half);

        let mut cos_kv = vec![BigFloat::one(), cv.clone()];
        let mut sin_kv = vec![BigFloat::zero(), sv.clone()];
        for k in 2..=10 {
            cos_kv.push(&cos_kv[k - 1] * &cv - &sin_kv[k - 1] * &sv);
            sin_kv.push(&sin_kv[k - 1] * &cv + &cos_kv[k - 1] * &sv);
        }
        let mut cos_khalf = vec![BigFloat::one(), cos_half.clone()];
        for k in 2..=13 {
            cos_khalf.push(2 * (&cos_half * &cos_khalf[k - 1]) - &cos_khalf[k - 2]);
        }

        Trig {
            csc_half: sin_half.recip(),
            sec_half: cos_half.recip(),
            tan_half: &sin_half / &cos_half,
            cot_half: &cos_half / &sin_half,
            csc_full: sv.recip(),
            cos_kv,
            sin_kv,
            cos_khalf,
            sin_half,
            cos_half,
        }
    }

    /// `cos(k v)`, `k <= 10`.
    fn c(&self, k: usize) -> &BigFloat {
        &self.cos_kv[k]
    }

    /// `sin(k v)`, `k <= 10`.
    fn s(&self, k: usize) -> &BigFloat {
        &self.sin_kv[k]
    }

    /// `cos(k v / 2)`, `k <= 13`.
    fn ch(&self, k: usize) -> &BigFloat {
        &self.cos_khalf[k]
    }
}

/// Evaluates the fitted half-weights `[b_1..b_6]` of the method whose
/// phase-lag function has `order` vanishing derivatives at the fitted
/// frequency, for `v` strictly between 0 and `2pi`.
pub(crate) fn fitted_b_extended(order: u8, v: &BigFloat) -> [BigFloat; 6] {
    let t = Trig::new(v);
    match order {
        0 => d0(v, &t),
        1 => d1(v, &t),
        2 => d2(v, &t),
        3 => d3(v, &t),
        4 => d4(v, &t),
        5 => d5(v, &t),
        _ => unreachable!("fitting order is 0..=5"),
    }
}

fn d0(v: &BigFloat, t: &Trig) -> [BigFloat; 6] {
    let v2 = v * v;
    let f = t.csc_half.powi(10);
    let b1n = ((-124184636 * t.c(1) + 70378348 * t.c(2) - 24862148 * t.c(3) + 5153611 * t.c(4))
        * &v2
        + 25 * (3013169 * &v2 - 16128 * t.c(3) + 32256 * t.c(4) - 32256 * t.c(5)
            + 16128 * t.c(6)))
        * &f;
    let b2n = (&v2
        * (159588050 * t.c(1) - 85350160 * t.c(2) + 16708985 * t.c(3) - 5153611 * t.c(5))
        - 16 * (6496079 * &v2 - 252000 * t.c(3) + 504000 * t.c(4) - 504000 * t.c(5)
            + 252000 * t.c(6)))
        * &f;
    let b3n = ((-367257540 * t.c(1) + 183567900 * t.c(2) - 16708985 * t.c(4)
        + 24862148 * t.c(5))
        * &v2
        + 81 * (3175117 * &v2 - 224000 * t.c(3) + 448000 * t.c(4) - 448000 * t.c(5)
            + 224000 * t.c(6)))
        * &f;
    let b4n = (30675810 * (t.c(1) * &v2) - 42958788 * &v2
        + 75 * ((161280 - 611893 * &v2) * t.c(3))
        + 140 * ((152411 * &v2 - 172800) * t.c(4))
        + (24192000 - 17594587 * &v2) * t.c(5)
        - 12096000 * t.c(6))
        * &f;
    let b5n = (-61351620 * (t.c(2) * &v2) + 85936557 * &v2
        + 30 * ((6120959 * &v2 - 1411200) * t.c(3))
        + 25 * ((3386880 - 3191761 * &v2) * t.c(4))
        + (62092318 * &v2 - 84672000) * t.c(5)
        + 42336000 * t.c(6))
        * &f;
    let b6n = ((-171873114 * t.c(1) + 171835152 * t.c(2) - 257184477 * t.c(3)
        + 103937264 * t.c(4)
        - 75329225 * t.c(5))
        * &v2
        + 50803200 * (t.c(3) - 2 * t.c(4) + 2 * t.c(5) - t.c(6)))
        * &f;
    let scale = |n: BigFloat, d: i64| n / (d * &v2);
    [
        scale(b1n, 206438400),
        scale(b2n, 206438400),
        scale(b3n, 206438400),
        scale(b4n, 51609600),
        scale(b5n, 103219200),
        scale(b6n, 103219200),
    ]
}

fn d1(v: &BigFloat, t: &Trig) -> [BigFloat; 6] {
    let v2 = v * v;
    let v3 = &v2 * v;
    let csch7 = t.csc_half.powi(7);
    let csch3 = t.csc_half.powi(3);
    let sech = &t.sec_half;
    let b1n = t.csc_half.powi(10)
        * sech
        * (53760 * ((2 * t.c(1) + 2 * t.c(2) + 2 * t.c(3) + 2 * t.c(5) + 1)
            * t.sin_half.powi(3))
            + v * ((304823 * t.ch(1) - 828603 * t.ch(3) + 554639 * t.ch(5)
                - 272779 * t.ch(7))
                * &v2
                + 6720 * (7 * t.ch(5) - 15 * t.ch(7)
                    + 2 * (9 * t.ch(9) - 6 * t.ch(11) + t.ch(13)))));
    let b2n = &csch7
        * (v * ((393310 * t.c(2) - 211395 * t.c(3) + 272779 * t.c(4)) * &v2
            + (122851 * &v2 + 1088640) * t.c(1)
            - 15 * (-1817 * &v2 + 74368 * t.c(2) - 65856 * t.c(3) + 45248 * t.c(4)
                - 19040 * t.c(5)
                + 1344 * t.c(6)
                + 224 * t.c(7)
                + 36288))
            * &csch3
            - 26880
                * ((10 * t.c(1) + 10 * t.c(2) + 9 * t.c(3) + 2 * t.c(4) + 8 * t.c(5)
                    + t.c(6)
                    + 5)
                    * sech));
    let b3n = &csch7
        * (26880
            * ((90 * t.c(1) + 90 * t.c(2) + 74 * t.c(3) + 32 * t.c(4) + 58 * t.c(5)
                + 16 * t.c(6)
                + 45)
                * sech)
            - v * ((2519110 * t.c(2) - 654530 * t.c(3) + 272779 * (6 * t.c(4) + t.c(5)))
                * &v2
                + (1288471 * &v2 + 4717440) * t.c(1)
                + 8 * (47587 * &v2 - 643440 * t.c(2) + 593880 * t.c(3) - 416640 * t.c(4)
                    + 159600 * t.c(5)
                    + 18480 * t.c(6)
                    - 6720 * t.c(7)
                    - 294840))
                * &csch3);
    let b4n = &csch7
        * (v * (1578002 * &v2
            + 2 * ((161489 * &v2 + 725760) * t.c(1))
            + 160 * ((20521 * &v2 - 13776) * t.c(2))
            + 5 * ((478464 - 4069 * &v2) * t.c(3))
            + 2 * ((738791 * &v2 - 900480) * t.c(4))
            + 3 * ((205341 * &v2 + 156800) * t.c(5))
            + 510720 * t.c(6)
            - 94080 * t.c(7)
            - 725760)
            * &csch3
            - 107520
                * ((30 * t.c(1) + 30 * t.c(2) + 23 * t.c(3) + 14 * t.c(4) + 16 * t.c(5)
                    + 7 * t.c(6)
                    + 15)
                    * sech));
    let b5n = -&csch7
        * (v * (923342 * &v2
            + 28 * ((343339 * &v2 - 181440) * t.c(1))
            + 20 * ((240593 * &v2 + 103488) * t.c(2))
            + 5 * ((832859 * &v2 + 18816) * t.c(3))
            + 2 * ((1574159 * &v2 - 376320) * t.c(4))
            + 3 * ((913431 * &v2 - 313600) * t.c(5))
            + 2446080 * t.c(6)
            - 376320 * t.c(7)
            + 2540160)
            * &csch3
            - 376320
                * ((30 * t.c(1) + 30 * t.c(2) + 22 * t.c(3) + 16 * t.c(4) + 14 * t.c(5)
                    + 8 * t.c(6)
                    + 15)
                    * sech));
    let b6n = &csch7
        * (v * (7 * (65953 * &v2 + 181440)
            + 7 * ((379709 * &v2 - 362880) * t.c(1))
            + 2 * ((694753 * &v2 + 799680) * t.c(2))
            + 4 * ((360653 * &v2 - 199920) * t.c(3))
            + 15 * ((52889 * &v2 + 21952) * t.c(4))
            + (875393 * &v2 - 540960) * t.c(5)
            + 799680 * t.c(6)
            - 117600 * t.c(7))
            * &csch3
            - 188160
                * ((18 * t.c(1) + 18 * t.c(2) + 13 * t.c(3) + 10 * t.c(4) + 8 * t.c(5)
                    + 5 * t.c(6)
                    + 9)
                    * sech));
    let scale = |n: BigFloat, d: i64| n / (d * &v3);
    [
        scale(b1n, 6881280),
        scale(b2n, 1720320),
        scale(b3n, 3440640),
        scale(b4n, 1720320),
        scale(b5n, 3440640),
        scale(b6n, 860160),
    ]
}

fn d2(v: &BigFloat, t: &Trig) -> [BigFloat; 6] {
    let v2 = v * v;
    let v3 = &v2 * v;
    let v4 = &v2 * &v2;
    let (csch, sech, tanh, coth, cscv) =
        (&t.csc_half, &t.sec_half, &t.tan_half, &t.cot_half, &t.csc_full);
    let cv = t.c(1);
    let b1n = -30720 * ((&v2 - 1) * cv)
        - 10 * (-387 * csch.powi(6)
            + 72 * ((128 * cv + 127) * cscv.powi(2))
            + 2048 * (&v2 - 3))
        - (8 * (-47 * &v4 - 2040 * &v2
            - (40 * (((22 * t.c(1) + 22 * t.c(2) + 9 * t.c(3) + 14 * t.c(4) + 8 * t.c(5)
                - 5 * t.c(6)
                + 11)
                * tanh.powi(3)
                - 27 * &v3)
                * v))
                / (cv - 1)
            + (4817 * &v4 + 3120 * &v2 + 4410) * cv
            - 2205 * t.c(2)
            - 2205))
            / (cv - 1).powi(4);
    let b2n = -1350 * (&v4 * csch.powi(10))
        + 225 * (&v2 * ((59 * &v2 + 12) * csch.powi(8)))
        - 5 * ((7361 * &v4 + 3696 * &v2 - 540) * csch.powi(6))
        + 6 * ((4817 * &v4 + 3120 * &v2 - 7710) * csch.powi(4))
        + 264780 * csch.powi(2)
        + 30720 * ((3 * &v2 - 7) * t.c(1))
        + 15360 * ((&v2 - 2) * t.c(2))
        + 30 * (v * coth)
            * (BigFloat::from_ratio(1, 8)
                * ((-2436 * t.c(1) + 1921 * t.c(2) + 1595) * csch.powi(6))
                + 8322)
        + 10 * (5632 * &v2 - 1024 * ((8 * t.c(1) + 23) * t.s(1) * v)
            + 6 * ((65 * t.c(1) + 66) * tanh * v) / (cv + 1)
            - 36 / (cv + 1)
            - 39936);
    let b3n = 12150 * (&v4 * csch.powi(10))
        - 675 * (&v2 * ((191 * &v2 + 36) * csch.powi(8)))
        + 15 * ((28499 * &v4 + 12432 * &v2 - 1620) * csch.powi(6))
        - 36450 * (v * coth * csch.powi(6))
        - 12 * ((44896 * &v4 + 26400 * &v2 - 35955) * csch.powi(4))
        + 381960 * (v * coth * csch.powi(4))
        + 12 * ((19268 * &v4 + 12480 * &v2 - 219885) * csch.powi(2))
        - 817950 * (v * coth * csch.powi(2))
        - 540 * sech.powi(2)
        - 5120 * (73 * &v2 - 831)
        - 61440 * ((9 * &v2 - 40) * t.c(1))
        - 61440 * ((3 * &v2 - 8) * t.c(2))
        - 10240 * ((&v2 - 3) * t.c(3))
        - 1512900 * (v * coth)
        + 1884160 * (v * t.s(1))
        + 532480 * (v * t.s(2))
        + 30720 * (v * t.s(3))
        + 90 * (v * sech.powi(2) * tanh)
        + 7740 * (v * tanh);
    let b4n = -4050 * (&v4 * csch.powi(10))
        + 675 * (&v2 * ((67 * &v2 + 12) * csch.powi(8)))
        - 15 * ((11113 * &v4 + 4464 * &v2 - 540) * csch.powi(6))
        + 12150 * (v * coth * csch.powi(6))
        + 6 * ((43259 * &v4 + 24000 * &v2 - 24570) * csch.powi(4))
        - 133920 * (v * coth * csch.powi(4))
        + 347250 * (v * coth * csch.powi(2))
        + 8 * (4817 * &v4 + 15840 * &v2 - 197280)
        + 7680 * ((19 * &v2 - 125) * t.c(1))
        + 30720 * ((2 * &v2 - 7) * t.c(2))
        + 7680 * ((&v2 - 3) * t.c(3))
        + 292500 * (v * coth)
        - 555520 * (v * t.s(1))
        - 194560 * (v * t.s(2))
        - 23040 * (v * t.s(3))
        - 30 * (v * sech.powi(2) * tanh)
        - 3180 * (v * tanh)
        + 72 * (4817 * &v4 + 3120 * &v2 - 26165) / (cv - 1)
        + 360 / (cv + 1);
    let b5n = 28350 * (&v4 * csch.powi(10))
        - 14175 * (&v2 * ((23 * &v2 + 4) * csch.powi(8)))
        + 45 * ((28269 * &v4 + 10864 * &v2 - 1260) * csch.powi(6))
        - 85050 * (v * coth * csch.powi(6))
        - 12 * ((182576 * &v4 + 98160 * &v2 - 87255) * csch.powi(4))
        + 965160 * (v * coth * csch.powi(4))
        + 180 * ((9634 * &v4 + 6240 * &v2 - 38111) * csch.powi(2))
        - 2753430 * (v * coth * csch.powi(2))
        - 256 * (2011 * &v4 + 3870 * &v2 - 45810)
        - 15360 * ((61 * &v2 - 479) * t.c(1))
        - 30720 * ((13 * &v2 - 56) * t.c(2))
        - 76800 * ((&v2 - 3) * t.c(3))
        - 1054260 * (v * coth)
        + 3537920 * (v * t.s(1))
        + 1372160 * (v * t.s(2))
        + 230400 * (v * t.s(3))
        - 30 * (v * sech.powi(2) * tanh)
        - 2100 * (v * tanh)
        + 360 / (cv + 1);
    let b6n = 93048 * &v4 + 156160 * &v2 + 1042425 * csch.powi(2)
        + 15360 * ((9 * &v2 - 74) * t.c(1))
        - 268800 * t.c(2)
        - 38400 * t.c(3)
        - (9 * ((7560 * csch.powi(2) + 14963) * &v4) + 187840 * &v2
            - 4 * ((237663 * &v4 + 77080 * &v2 + 298620) * t.c(1))
            + 5 * ((34095 * &v4 - 4000 * &v2 + 63126) * t.c(2)
                - 2 * (v * (v * ((14451 * &v2 - 5200) * t.c(3))
                    + 8 * (5 * (v * (140 * t.c(4) - 16 * t.c(5) - 7 * t.c(6) + 2 * t.c(7)))
                        - 666 * t.s(1)
                        + 600 * t.s(2)
                        - 298 * t.s(3)
                        + 238 * t.s(4)
                        + 40 * t.s(5)
                        + 80 * t.s(6)
                        - 30 * t.s(7))
                    + 36 * ((sech.powi(2) + 94) * tanh))))
            + 878850)
            / (cv - 1).powi(4)
        - 270 / (cv + 1)
        - 1793280;
    let scale = |n: BigFloat, d: i64| n / (d * &v4);
    [
        scale(b1n, 5120),
        scale(b2n, 2560),
        scale(b3n, 5120),
        scale(b4n, 640),
        scale(b5n, 2560),
        scale(b6n, 320),
    ]
}

fn d3(v: &BigFloat, t: &Trig) -> [BigFloat; 6] {
    let v2 = v * v;
    let v3 = &v2 * v;
    let v4 = &v2 * &v2;
    let v5 = &v3 * &v2;
    let (csch, sech, tanh, coth) = (&t.csc_half, &t.sec_half, &t.tan_half, &t.cot_half);
    let cv = t.c(1);
    let b1n = -108 * (&v5 * csch.powi(10))
        + 9 * (&v3 * ((53 * &v2 + 12) * csch.powi(8)))
        + 486 * (v * csch.powi(6))
        - 2484 * (v * csch.powi(4))
        - 6144 * (v * ((4 * &v2 - 9) * t.c(1)))
        + 3 * coth
            * (99 * (&v2 * csch.powi(6))
                + 9 * ((16 - 9 * &v2) * csch.powi(4))
                - 8 * ((113 * &v2 + 276) * csch.powi(2))
                - 11266 * &v2
                + 10032)
        - 6144 * (&v3 - 6 * v + 4 * t.s(1))
        + 2 * (&v2 * (26624 * t.s(1) - 5635 * tanh))
        + 5520 * tanh
        - 9 * (v * sech.powi(4) * (v * tanh - 6))
        - 6 * (sech.powi(2) * ((61 * &v2 + 24) * tanh - 363 * v))
        + 32508 * v / (cv - 1);
    let b2n = 540 * (&v5 * csch.powi(10))
        - 45 * (&v3 * ((71 * &v2 + 12) * csch.powi(8)))
        + 18 * (v * ((212 * &v4 + 48 * &v2 - 135) * csch.powi(6)))
        - 1485 * (&v2 * coth * csch.powi(6))
        + 15984 * (v * csch.powi(4))
        + 27 * ((131 * &v2 - 80) * coth * csch.powi(4))
        + 55782 * (v * csch.powi(2))
        + 6 * ((1777 * &v2 + 5952) * coth * csch.powi(2))
        + 54 * (v * sech.powi(4))
        + 6144 * (v * (5 * &v2 - 39))
        + 6144 * (v * ((8 * &v2 - 33) * t.c(1)))
        + 18432 * (v * ((&v2 - 4) * t.c(2)))
        + 6 * ((20035 * &v2 - 31704) * coth)
        - 20480 * ((7 * &v2 - 6) * t.s(1))
        + 3072 * ((12 - 19 * &v2) * t.s(2))
        - 9 * (&v2 * sech.powi(4) * tanh)
        - 12 * ((23 * &v2 + 12) * sech.powi(2) * tanh)
        + 14 * ((456 - 337 * &v2) * tanh)
        + 3276 * v / (cv + 1);
    let b3n = -1620 * (&v5 * csch.powi(10))
        + 135 * (&v3 * ((85 * &v2 + 12) * csch.powi(8)))
        - 6 * (v * ((3872 * &v4 + 768 * &v2 - 1215) * csch.powi(6)))
        + 4455 * (&v2 * coth * csch.powi(6))
        + 36 * (v * ((424 * &v4 + 96 * &v2 - 1563) * csch.powi(4)))
        + 9 * ((720 - 1781 * &v2) * coth * csch.powi(4))
        - 96642 * (v * csch.powi(2))
        - 24 * ((685 * &v2 + 4716) * coth * csch.powi(2))
        - 54 * (v * sech.powi(4))
        + 1024 * (v * (606 - 67 * &v2))
        - 49152 * (v * ((2 * &v2 - 13) * t.c(1)))
        - 49152 * (v * ((&v2 - 5) * t.c(2)))
        + 2048 * (v * ((21 - 4 * &v2) * t.c(3)))
        + 6 * ((111720 - 46199 * &v2) * coth)
        + 32768 * ((11 * &v2 - 15) * t.s(1))
        + 4096 * ((41 * &v2 - 36) * t.s(2))
        + 4096 * ((7 * &v2 - 6) * t.s(3))
        + 9 * (&v2 * sech.powi(4) * tanh)
        + 6 * ((61 * &v2 + 24) * sech.powi(2) * tanh)
        + 10 * ((1055 * &v2 - 552) * tanh)
        - 4356 * v / (cv + 1);
    let b4n = 1620 * (&v5 * csch.powi(10))
        - 135 * (&v3 * ((95 * &v2 + 12) * csch.powi(8)))
        + 18 * (v * ((1844 * &v4 + 336 * &v2 - 405) * csch.powi(6)))
        - 4455 * (&v2 * coth * csch.powi(6))
        - 216 * (v * ((169 * &v4 + 36 * &v2 - 288) * csch.powi(4)))
        + 27 * ((737 * &v2 - 240) * coth * csch.powi(4))
        + 18 * (v * ((848 * &v4 + 192 * &v2 + 2229) * csch.powi(2)))
        + 18 * ((35 * &v2 + 6528) * coth * csch.powi(2))
        - 54 * (v * sech.powi(4))
        + 384 * (v * (133 * &v2 - 1350))
        + 768 * (v * ((112 * &v2 - 843) * t.c(1)))
        + 3072 * (v * ((13 * &v2 - 81) * t.c(2)))
        + 1536 * (v * ((8 * &v2 - 45) * t.c(3)))
        + 768 * (v * ((&v2 - 6) * t.c(4)))
        + 54 * ((4447 * &v2 - 13800) * coth)
        + 512 * ((1146 - 659 * &v2) * t.s(1))
        - 512 * ((289 * &v2 - 348) * t.s(2))
        + 1024 * ((42 - 43 * &v2) * t.s(3))
        + 256 * ((12 - 11 * &v2) * t.s(4))
        + (9 * (&v2 * sech.powi(4)) + 5258 * &v2 + (552 * &v2 + 288) / (cv + 1) - 6384)
            * tanh
        - 3276 * v / (cv + 1);
    let b5n = -11340 * (&v5 * csch.powi(10))
        + 945 * (&v3 * ((101 * &v2 + 12) * csch.powi(8)))
        - 18 * (v * ((15472 * &v4 + 2688 * &v2 - 2835) * csch.powi(6)))
        + 31185 * (&v2 * coth * csch.powi(6))
        + 108 * (v * ((3500 * &v4 + 720 * &v2 - 4263) * csch.powi(4)))
        + 189 * ((240 - 823 * &v2) * coth * csch.powi(4))
        + 864 * ((87 * &v2 - 973) * coth * csch.powi(2))
        + 54 * (v * sech.powi(4))
        + 384 * (v * (159 * &v4 - 796 * &v2 + 8568))
        + 3072 * (v * ((1395 - 172 * &v2) * t.c(1)))
        - 24576 * (v * ((11 * &v2 - 75) * t.c(2)))
        + 3072 * (v * ((171 - 28 * &v2) * t.c(3)))
        - 12288 * (v * ((&v2 - 6) * t.c(4)))
        + 18 * ((307848 - 88943 * &v2) * coth)
        + 2048 * ((1055 * &v2 - 2154) * t.s(1))
        + 2048 * ((505 * &v2 - 708) * t.s(2))
        + 2048 * ((155 * &v2 - 174) * t.s(3))
        + 4096 * ((11 * &v2 - 12) * t.s(4))
        - 9 * (&v2 * sech.powi(4) * tanh)
        - 6 * ((61 * &v2 + 24) * sech.powi(2) * tanh)
        + 10 * ((552 - 1019 * &v2) * tanh)
        + 36 * (v * (256 * ((53 * &v2 + 12) * &v2) + 1479)) / (cv - 1)
        + 4356 * v / (cv + 1);
    let b6n = 2268 * (&v5 * csch.powi(10))
        - 189 * (&v3 * ((103 * &v2 + 12) * csch.powi(8)))
        + 6 * (v * ((9820 * &v4 + 1680 * &v2 - 1701) * csch.powi(6)))
        - 6237 * (&v2 * coth * csch.powi(6))
        - 144 * (v * ((590 * &v4 + 120 * &v2 - 651) * csch.powi(4)))
        + 63 * ((511 * &v2 - 144) * coth * csch.powi(4))
        + 18 * (v * ((3392 * &v4 + 768 * &v2 - 677) * csch.powi(2)))
        + 6 * ((28224 - 3463 * &v2) * coth * csch.powi(2))
        + 54 * (v * sech.powi(4))
        - 128 * (v * (141 * &v4 - 460 * &v2 + 5016))
        + 3072 * (v * ((32 * &v2 - 269) * t.c(1)))
        + 6144 * (v * ((9 * &v2 - 62) * t.c(2)))
        + 2048 * (v * ((8 * &v2 - 51) * t.c(3)))
        + 3072 * (v * ((&v2 - 6) * t.c(4)))
        + 1002 * ((317 * &v2 - 1128) * coth)
        - 6144 * ((67 * &v2 - 146) * t.s(1))
        - 3072 * ((69 * &v2 - 100) * t.s(2))
        - 12288 * ((5 * &v2 - 6) * t.s(3))
        + 1024 * ((12 - 11 * &v2) * t.s(4))
        - (9 * (&v2 * sech.powi(4)) + 5438 * &v2 + (552 * &v2 + 288) / (cv + 1) - 6384)
            * tanh
        + 3276 * v / (cv + 1);
    let scale = |n: BigFloat, d: i64| n / (d * &v5);
    [
        scale(b1n, 3072),
        scale(b2n, 1536),
        scale(b3n, 1024),
        scale(b4n, 384),
        scale(b5n, 1536),
        scale(b6n, 256),
    ]
}

fn d4(v: &BigFloat, t: &Trig) -> [BigFloat; 6] {
    let v2 = v * v;
    let v3 = &v2 * v;
    let v4 = &v2 * &v2;
    let v6 = &v4 * &v2;
    let (csch, sech, tanh, coth, cscv) =
        (&t.csc_half, &t.sec_half, &t.tan_half, &t.cot_half, &t.csc_full);
    let cv = t.c(1);
    let b1n = 216 * (&v6 * csch.powi(10))
        - 810 * (&v2 * csch.powi(6))
        - 54 * ((157 * &v2 + 80) * csch.powi(4))
        + 36 * ((1840 - 2257 * &v2) * csch.powi(2))
        - 12288 * ((20 * &v4 - 71 * &v2 + 20) * t.c(1))
        - 3 * (v * coth)
            * ((4682 * &v2
                + 9 * (csch.powi(2) * (5 * (csch.powi(2) * &v2) + 54 * &v2 + 96))
                + 5856)
                * csch.powi(2)
                + 2520 * (31 * &v2 - 48))
        - 45 * (&v2 * sech.powi(6) * (v * tanh - 6))
        + 56 * (v * (1024 * ((11 * &v2 - 12) * t.s(1)) + 135 * ((48 - 31 * &v2) * tanh)))
        - 18 * (sech.powi(4) * (-373 * &v2 + 3 * ((21 * &v2 + 16) * tanh * v) - 80))
        - 2 * (sech.powi(2)
            * (-39246 * &v2 + (6733 * &v2 + 6384) * tanh * v + 28320));
    let b2n = -1080 * (&v6 * csch.powi(10))
        + 2160 * (&v6 * csch.powi(8))
        + 4050 * (&v2 * csch.powi(6))
        + 54 * ((617 * &v2 + 400) * csch.powi(4))
        + 293508 * (&v2 * csch.powi(2))
        + 12288 * ((20 * &v4 - 71 * &v2 + 20) * t.c(1))
        + 24576 * ((10 * &v4 - 59 * &v2 + 20) * t.c(2))
        + 3 * (v * coth)
            * ((16978 * &v2
                + 9 * (csch.powi(2) * (25 * (csch.powi(2) * &v2) + 214 * &v2 + 480))
                + 20064)
                * csch.powi(2)
                + 120 * (2341 * &v2 - 5136))
        + (72 * (4096 * &v4 - 31783 * &v2
            - 80 * ((257 * t.c(1) + 251) * cscv.powi(2))
            + 1024 * ((4 * &v4 - 35 * &v2 + 20) * t.c(1))
            + 25600))
            / (cv + 1)
        - v * (135 * (v * (v * tanh - 6) * sech.powi(6))
            + 18 * (((161 * &v2 + 144) * tanh - 951 * v) * sech.powi(4))
            + 18 * ((1407 * &v2 + 1616) * tanh * sech.powi(2))
            + 8 * (7168 * ((11 * &v2 - 12) * t.s(1))
                + 1024 * ((107 * &v2 - 156) * t.s(2))
                + 15 * ((3217 * &v2 - 9168) * tanh)));
    let b3n = 9720 * (&v6 * csch.powi(10))
        - 34560 * (&v6 * csch.powi(8))
        + 270 * (&v2 * ((128 * &v4 - 135) * csch.powi(6)))
        - 6075 * (&v3 * coth * csch.powi(6))
        - 162 * ((1459 * &v2 + 1200) * csch.powi(4))
        - 54 * (v * ((767 * &v2 + 2160) * coth * csch.powi(4)))
        + 108 * ((32720 - 18831 * &v2) * csch.powi(2))
        - 234 * (v * ((1511 * &v2 + 1488) * coth * csch.powi(2)))
        + 3510 * (&v2 * sech.powi(6))
        + 90 * ((701 * &v2 + 208) * sech.powi(4))
        - 12288 * (98 * &v4 - 825 * &v2 + 540)
        - 12288 * ((220 * &v4 - 1717 * &v2 + 940) * t.c(1))
        - 98304 * ((10 * &v4 - 59 * &v2 + 20) * t.c(2))
        - 24576 * ((20 * &v4 - 147 * &v2 + 60) * t.c(3))
        + 360 * (v * ((45744 - 16567 * &v2) * coth))
        + 8192 * (v * ((1279 * &v2 - 2868) * t.s(1)))
        + 32768 * (v * ((107 * &v2 - 156) * t.s(2)))
        + 147456 * (v * ((13 * &v2 - 24) * t.s(3)))
        - v * (585 * (&v2 * sech.powi(6))
            + (42991 * &v2 + (32281 * &v2 + 46128) * t.c(1) + 57360) * sech.powi(4)
            + 120 * (8741 * &v2 - 38928))
            * tanh
        + 24 * (30457 * &v2 - 69040) / (cv + 1);
    let b4n = -3240 * (&v6 * csch.powi(10))
        + 15120 * (&v6 * csch.powi(8))
        - 810 * (&v2 * ((32 * &v4 - 15) * csch.powi(6)))
        + 2025 * (&v3 * coth * csch.powi(6))
        + 54 * ((320 * &v6 + 1179 * &v2 + 1200) * csch.powi(4))
        + 54 * (v * ((209 * &v2 + 720) * coth * csch.powi(4)))
        + 108 * ((5237 * &v2 - 11440) * csch.powi(2))
        + 18 * (v * ((5461 * &v2 + 3888) * coth * csch.powi(2)))
        + 270 * (&v2 * sech.powi(6))
        + 90 * ((41 * &v2 + 16) * sech.powi(4))
        + 76800 * (5 * &v4 - 54 * &v2 + 48)
        + 6144 * ((100 * &v4 - 819 * &v2 + 480) * t.c(1))
        + 73728 * ((5 * &v4 - 39 * &v2 + 20) * t.c(2))
        + 6144 * ((20 * &v4 - 147 * &v2 + 60) * t.c(3))
        + 6144 * ((5 * &v4 - 41 * &v2 + 20) * t.c(4))
        + 360 * (v * ((4705 * &v2 - 14928) * coth))
        - 36864 * (v * ((67 * &v2 - 154) * t.s(1)))
        - 86016 * (v * ((17 * &v2 - 36) * t.s(2)))
        - 36864 * (v * ((13 * &v2 - 24) * t.s(3)))
        - 2048 * (v * ((61 * &v2 - 132) * t.s(4)))
        - v * (((1087 + 90 / (cv + 1)) * &v2 + (457 * &v2 + 1776) * t.c(1) + 2640)
            * sech.powi(4)
            + 120 * (349 * &v2 - 2832))
            * tanh
        + 24 * (349 * &v2 - 5680) / (cv + 1);
    let b5n = 22680 * (&v6 * csch.powi(10))
        - 120960 * (&v6 * csch.powi(8))
        + 4050 * (&v2 * ((64 * &v4 - 21) * csch.powi(6)))
        - 14175 * (&v3 * coth * csch.powi(6))
        - 54 * ((5120 * &v6 + 7077 * &v2 + 8400) * csch.powi(4))
        - 378 * (v * ((181 * &v2 + 720) * coth * csch.powi(4)))
        + 108 * ((1280 * &v6 - 33131 * &v2 + 82320) * csch.powi(2))
        - 378 * (v * ((1643 * &v2 + 784) * coth * csch.powi(2)))
        - 1890 * (&v2 * sech.powi(6))
        - 126 * ((277 * &v2 + 80) * sech.powi(4))
        - 15360 * (160 * &v4 - 1833 * &v2 + 1740)
        - 30720 * ((120 * &v4 - 1079 * &v2 + 740) * t.c(1))
        - 6144 * ((400 * &v4 - 3271 * &v2 + 1780) * t.c(2))
        - 6144 * ((140 * &v4 - 1113 * &v2 + 540) * t.c(3))
        - 49152 * ((5 * &v4 - 41 * &v2 + 20) * t.c(4))
        - 6144 * ((4 * &v4 - 35 * &v2 + 20) * t.c(5))
        + 360 * (v * ((102576 - 30047 * &v2) * coth))
        + 20480 * (v * ((755 * &v2 - 1956) * t.s(1)))
        + 4096 * (v * ((2429 * &v2 - 5412) * t.s(2)))
        + 12288 * (v * ((281 * &v2 - 588) * t.s(3)))
        + 16384 * (v * ((61 * &v2 - 132) * t.s(4)))
        + 20480 * (v * ((5 * &v2 - 12) * t.s(5)))
        + v * (((25429 + 630 / (cv + 1)) * &v2 + (19507 * &v2 + 26256) * t.c(1) + 32304)
            * sech.powi(4)
            + 120 * (5347 * &v2 - 20976))
            * tanh
        + (885120 - 443976 * &v2) / (cv + 1);
    let b6n = -13608 * (&v6 * csch.powi(10))
        + 75600 * (&v6 * csch.powi(8))
        + 270 * (&v2 * ((189 - 640 * &v4) * csch.powi(6)))
        + 8505 * (&v3 * coth * csch.powi(6))
        + 162 * ((1280 * &v6 + 1337 * &v2 + 1680) * csch.powi(4))
        + 378 * (v * ((103 * &v2 + 432) * coth * csch.powi(4)))
        + 126 * (v * ((2863 * &v2 + 1104) * coth * csch.powi(2)))
        - 1890 * (&v2 * sech.powi(6))
        - 126 * ((253 * &v2 + 80) * sech.powi(4))
        + 3072 * (18 * &v6 + 400 * &v4 - 4575 * &v2 + 4500)
        + 30720 * ((80 * &v4 - 753 * &v2 + 540) * t.c(1))
        + 30720 * ((40 * &v4 - 327 * &v2 + 180) * t.c(2))
        + 6144 * ((100 * &v4 - 819 * &v2 + 420) * t.c(3))
        + 24576 * ((5 * &v4 - 41 * &v2 + 20) * t.c(4))
        + 6144 * ((4 * &v4 - 35 * &v2 + 20) * t.c(5))
        + 360 * (v * ((17495 * &v2 - 61104) * coth))
        - 552960 * (v * ((19 * &v2 - 52) * t.s(1)))
        - 552960 * (v * ((9 * &v2 - 20) * t.s(2)))
        - 12288 * (v * ((203 * &v2 - 444) * t.s(3)))
        - 8192 * (v * ((61 * &v2 - 132) * t.s(4)))
        - 20480 * (v * ((5 * &v2 - 12) * t.s(5)))
        + v * (63 * ((48 * (&v2 + 1) + (43 * &v2 + 48) * t.c(1)) * sech.powi(6))
            + 840 * (659 * &v2 - 2928)
            + (57964 * &v2 + 86592) / (cv + 1))
            * tanh
        + 216 * (1280 * &v6 - 19257 * &v2 + 49840) / (cv - 1)
        + (908160 - 325608 * &v2) / (cv + 1);
    let scale = |n: BigFloat, d: i64| n / (d * &v6);
    [
        scale(b1n, 24576),
        scale(b2n, 12288),
        scale(b3n, 24576),
        scale(b4n, 3072),
        scale(b5n, 12288),
        scale(b6n, 6144),
    ]
}

fn d5(v: &BigFloat, t: &Trig) -> [BigFloat; 6] {
    let v2 = v * v;
    let v3 = &v2 * v;
    let v4 = &v2 * &v2;
    let v5 = &v4 * v;
    let v7 = &v5 * &v2;
    let (csch, sech, tanh, coth, cscv) =
        (&t.csc_half, &t.sec_half, &t.tan_half, &t.cot_half, &t.csc_full);
    let (sinh, cosh) = (&t.sin_half, &t.cos_half);
    let cv = t.c(1);

    let e_inner = -60
        * (v * (45 * t.c(3) + 24 * t.c(4) - 25 * t.c(5) - 14 * t.c(6) + 5 * t.c(7)
            + 3 * t.c(8)))
        + 405 * coth
        + 357 * t.s(1)
        - 2530 * t.s(2)
        + 4516 * t.s(3)
        + 3752 * t.s(4)
        - 3373 * t.s(5)
        - 2324 * t.s(6)
        + 770 * t.s(7)
        + 522 * t.s(8)
        + 315 * tanh;
    let d_inner = 15 * ((72 * &v2 - 155) * t.c(2)) + v * e_inner;
    let c_inner = 15
        * (366 * t.c(3) + 686 * t.c(4) - 503 * t.c(5) - 480 * t.c(6) + 142 * t.c(7)
            + 116 * t.c(8))
        + 2 * d_inner;
    let b_inner = v * c_inner
        - 60 * (49 * t.s(1) - 44 * t.s(2) - 6 * t.s(3) + 131 * t.s(4) - 67 * t.s(5)
            - 114 * t.s(6)
            + 28 * t.s(7)
            + 31 * t.s(8));
    let a_inner = 15 * ((200 * &v4 + 283 * &v2 - 100) * t.c(1))
        + 300 * (2 * t.c(2) + 6 * t.c(3) - 10 * t.c(4) + t.c(5) + 12 * t.c(6)
            - 2 * t.c(7)
            - 4 * t.c(8))
        + v * b_inner;
    let b1n = -(cosh.powi(5) * cscv.powi(13) * sinh.powi(7))
        * (60 * (-5 * &v5 + 3 * &v3 + 3 * t.s(1) - 6 * t.s(3) + 3 * t.s(4) + 3 * t.s(5)
            - 6 * t.s(6)
            + 3 * t.s(8))
            + BigFloat::from_ratio(1, 2) * (v * a_inner));

    let p4 = -393216 * (v * ((15 * t.c(2) + 17) * sinh.powi(7) * cosh.powi(9)))
        + 4476 * t.c(3)
        + 1918 * t.c(4)
        + 2288 * t.c(5)
        + 1242 * t.c(6)
        - 2476 * t.c(7)
        - 1400 * t.c(8)
        + 582 * t.c(9)
        + 351 * t.c(10);
    let p3 = 3
        * (-12 * t.s(1) - 3789 * t.s(2) + 3900 * t.s(3) + 2058 * t.s(4) + 708 * t.s(5)
            + 1632 * t.s(6)
            - 2142 * t.s(7)
            - 1792 * t.s(8)
            + 614 * t.s(9)
            + 461 * t.s(10))
        - 2 * (v * p4);
    let p2 = 2 * ((5117 * &v2 - 4254) * t.c(2))
        + 12 * (516 * t.c(3) + 482 * t.c(4) - 158 * t.c(5) + 348 * t.c(6) - 317 * t.c(7)
            - 486 * t.c(8)
            + 132 * t.c(9)
            + 137 * t.c(10))
        + v * p3;
    let tail = 15360
        * (cosh.powi(3)
            * ((186 * t.c(1) + 156 * t.c(2) + 132 * t.c(3) + 78 * t.c(4) + 48 * t.c(5)
                + 19 * t.c(6)
                + 98)
                * sinh.powi(5)));
    let head = 4 * ((3875 * &v4 - 519 * &v2 - 90) * t.c(1))
        - 36 * (147 * &v4 - 76 * &v2 - 10 * t.c(2) + 20 * t.c(4) - 20 * t.c(5)
            + 10 * t.c(7)
            - 20 * t.c(8)
            + 10 * t.c(10));
    // The trailing product block rides inside the leading v factor; the
    // Maclaurin expansion around v = 0 pins this grouping (the alternative
    // reading diverges from the series at the v^2 term already).
    let b2n = csch.powi(7) * sech.powi(9) * (head + v * (v * p2 - tail));

    let b3n = -(cosh.powi(6) * cscv.powi(14) * sinh.powi(8))
        * (7290 * (coth * &v4)
            + 5670 * (tanh * &v4)
            + 32 * ((56 * &v2 - 93) * t.s(9) * &v2)
            + 12 * ((250 * &v4 - 751 * &v2 + 100) * v)
            + 3 * ((2140 * &v4 + 13737 * &v2 - 2220) * t.c(1) * v)
            - 6 * ((260 * &v4 - 591 * &v2 + 540) * t.c(2) * v)
            + 6 * ((-1702 * &v4 + 2971 * &v2 + 1100) * t.c(3) * v)
            - 6 * ((584 * &v4 - 3933 * &v2 + 1020) * t.c(4) * v)
            + 15 * ((236 * &v4 - 1395 * &v2 + 228) * t.c(5) * v)
            + 12 * ((182 * &v4 - 1121 * &v2 + 800) * t.c(6) * v)
            + 12 * ((61 * &v4 - 201 * &v2 - 180) * t.c(7) * v)
            + 12 * ((10 * &v4 - 171 * &v2 + 60) * t.c(8) * v)
            - 60 * ((8 * &v4 - 53 * &v2 + 20) * t.c(9) * v)
            - 24 * ((10 * &v4 - 93 * &v2 + 90) * t.c(10) * v)
            + 6 * ((1327 * &v4 - 974 * &v2 - 60) * t.s(1))
            - 4 * ((1295 * &v4 + 1098 * &v2 - 180) * t.s(2))
            + 8 * ((3403 * &v4 + 579 * &v2 - 270) * t.s(3))
            + 4 * ((3256 * &v4 - 4557 * &v2 + 90) * t.s(4))
            + 2 * ((-6097 * &v4 + 8058 * &v2 + 180) * t.s(5))
            - 8 * ((935 * &v4 - 1929 * &v2 + 270) * t.s(6))
            - 4 * ((593 * &v4 + 126 * &v2 - 180) * t.s(7))
            - 4 * ((&v2 - 3) * (199 * &v2 + 30) * t.s(8))
            + 8 * ((127 * &v4 - 363 * &v2 + 90) * t.s(10)));

    let b4n = 5670 * (&v3 * sech.powi(8))
        - 945 * (&v4 * tanh * sech.powi(8))
        + 270 * (v * ((257 * &v2 + 160) * sech.powi(6)))
        - 1080 * (&v2 * ((11 * &v2 + 18) * tanh * sech.powi(6)))
        + 4320 * (v * ((51 * &v2 - 46) * sech.powi(4)))
        - 18 * ((2267 * &v4 + 9816 * &v2 + 2880) * tanh * sech.powi(4))
        + 4 * ((-61651 * &v4 + 89664 * &v2 + 570240) * tanh * sech.powi(2))
        + 7290 * (&v3 * csch.powi(6))
        + 1215 * (&v4 * coth * csch.powi(6))
        + 78732 * (&v3 * csch.powi(4))
        + 81 * (&v2 * ((167 * &v2 + 240) * coth * csch.powi(4)))
        + 756 * (v * ((1127 * &v2 - 2640) * csch.powi(2)))
        + 9 * ((16297 * &v4 + 2592 * &v2 - 17280) * coth * csch.powi(2))
        + 46080 * (v * (30 * &v4 - 443 * &v2 + 980))
        + 73728 * (v * ((101 * &v2 - 370) * t.c(1)))
        + 36864 * (v * ((40 * &v4 - 431 * &v2 + 580) * t.c(2)))
        + 73728 * (v * ((13 * &v2 - 40) * t.c(3)))
        + 6144 * (v * ((30 * &v4 - 307 * &v2 + 340) * t.c(4)))
        + 9 * ((342973 * &v4 - 1171680 * &v2 + 328320) * coth)
        + 73728 * ((17 * &v4 - 271 * &v2 + 210) * t.s(1))
        - 98304 * ((67 * &v4 - 243 * &v2 + 90) * t.s(2))
        + 16384 * ((10 * &v4 - 147 * &v2 + 90) * t.s(3))
        - 24576 * ((33 * &v4 - 107 * &v2 + 30) * t.s(4))
        + (-3937883 * &v4 + 28223520 * &v2 - 21006720) * tanh
        + 24 * (v * (115673 * &v2 - 893360)) / (cv + 1);

    let b5n = 39690 * (&v3 * sech.powi(8))
        - 6615 * (&v4 * tanh * sech.powi(8))
        + 1890 * (v * ((239 * &v2 + 160) * sech.powi(6)))
        - 1890 * (&v2 * ((41 * &v2 + 72) * tanh * sech.powi(6)))
        + 756 * (v * ((1471 * &v2 - 2160) * sech.powi(4)))
        - 378 * ((561 * &v4 + 2968 * &v2 + 960) * tanh * sech.powi(4))
        + 84 * (v * ((99661 * &v2 - 859120) * sech.powi(2)))
        - 56 * ((26371 * &v4 - 61404 * &v2 - 289440) * tanh * sech.powi(2))
        - 51030 * (&v3 * csch.powi(6))
        - 8505 * (&v4 * coth * csch.powi(6))
        - 503496 * (&v3 * csch.powi(4))
        - 1701 * (&v2 * ((51 * &v2 + 80) * coth * csch.powi(4)))
        - 756 * (v * ((7131 * &v2 - 18320) * csch.powi(2)))
        - 189 * ((4913 * &v4 + 256 * &v2 - 5760) * coth * csch.powi(2))
        - 92160 * (v * (373 * &v2 - 2140))
        - 245760 * (v * ((60 * &v4 - 767 * &v2 + 1400) * t.c(1)))
        - 12288 * (v * ((1829 * &v2 - 6620) * t.c(2)))
        - 884736 * (v * ((5 * &v4 - 54 * &v2 + 70) * t.c(3)))
        - 24576 * (v * ((61 * &v2 - 220) * t.c(4)))
        - 49152 * (v * ((6 * &v4 - 65 * &v2 + 80) * t.c(5)))
        - 9 * ((2193517 * &v4 - 8002080 * &v2 + 2378880) * coth)
        + 245760 * ((287 * &v4 - 1321 * &v2 + 690) * t.s(1))
        - 24576 * ((151 * &v4 - 2446 * &v2 + 1860) * t.s(2))
        + 16384 * ((1211 * &v4 - 4317 * &v2 + 1530) * t.s(3))
        - 49152 * ((5 * &v4 - 82 * &v2 + 60) * t.s(4))
        + 49152 * ((27 * &v4 - 95 * &v2 + 30) * t.s(5))
        + (-24636373 * &v4 + 185682720 * &v2 - 157806720) * tanh;

    let b6n = 119070 * (&v3 * sech.powi(8))
        - 19845 * (&v4 * tanh * sech.powi(8))
        + 5670 * (v * ((233 * &v2 + 160) * sech.powi(6)))
        - 45360 * (&v2 * ((5 * &v2 + 9) * tanh * sech.powi(6)))
        + 30240 * (v * ((97 * &v2 - 170) * sech.powi(4)))
        - 126 * ((4501 * &v4 + 25800 * &v2 + 8640) * tanh * sech.powi(4))
        + 28 * ((-151573 * &v4 + 398400 * &v2 + 1745280) * tanh * sech.powi(2))
        + 153090 * (&v3 * csch.powi(6))
        + 25515 * (&v4 * coth * csch.powi(6))
        + 1462860 * (&v3 * csch.powi(4))
        + 2835 * (&v2 * ((89 * &v2 + 144) * coth * csch.powi(4)))
        + 3780 * (v * ((4139 * &v2 - 10960) * csch.powi(2)))
        + 63 * ((42779 * &v4 + 480 * &v2 - 51840) * coth * csch.powi(2))
        + 61440 * (v * (400 * &v4 - 6273 * &v2 + 15540))
        + 184320 * (v * ((737 * &v2 - 3260) * t.c(1)))
        + 184320 * (v * ((150 * &v4 - 1739 * &v2 + 2660) * t.c(2)))
        + 368640 * (v * ((61 * &v2 - 220) * t.c(3)))
        + 61440 * (v * ((72 * &v4 - 779 * &v2 + 980) * t.c(4)))
        + 614400 * (v * ((&v2 - 4) * t.c(5)))
        + 30720 * (v * ((4 * &v4 - 45 * &v2 + 60) * t.c(6)))
        + 27 * ((2129819 * &v4 - 7933600 * &v2 + 2405760) * coth)
        + 122880 * ((173 * &v4 - 3222 * &v2 + 3060) * t.s(1))
        - 491520 * ((259 * &v4 - 1035 * &v2 + 450) * t.s(2))
        + 8192 * ((451 * &v4 - 7365 * &v2 + 5490) * t.s(3))
        - 24576 * ((809 * &v4 - 2860 * &v2 + 960) * t.s(4))
        + 49152 * ((2 * &v4 - 35 * &v2 + 30) * t.s(5))
        - 4096 * ((137 * &v4 - 510 * &v2 + 180) * t.s(6))
        + (-71232167 * &v4 + 545068320 * &v2 - 484318080) * tanh
        + 4200 * (v * (11495 * &v2 - 101648)) / (cv + 1);

    let scale = |n: BigFloat, d: i64| n / (d * &v7);
    [
        scale(b1n, 30),
        scale(b2n, 393216),
        scale(b3n, 6),
        scale(b4n, 6144),
        scale(b5n, 24576),
        scale(b6n, 61440),
    ]
}
