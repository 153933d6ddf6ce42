//! Small repeated-measures datasets with reference results computed in
//! 50-digit arithmetic from the definitional formulas.
#![allow(dead_code)]

pub struct Pair {
    pub first: usize,
    pub second: usize,
    pub mean: f64,
    pub se: f64,
    pub t: f64,
    pub p_bonferroni: f64,
    pub ci: (f64, f64),
}

pub struct Dataset {
    pub name: &'static str,
    pub rows: &'static [[f64; 3]],
    pub ss_factor: f64,
    pub ss_subjects: f64,
    pub ss_residual: f64,
    pub f: f64,
    pub p: f64,
    pub epsilon_gg: f64,
    pub epsilon_hf: f64,
    pub p_gg: f64,
    pub p_hf: f64,
    pub pairs: &'static [Pair],
}

pub const DATASETS: &[Dataset] = &[
    Dataset {
        name: "A",
        rows: &[
            [45.0, 50.0, 55.0],
            [42.0, 42.0, 45.0],
            [36.0, 41.0, 43.0],
            [39.0, 35.0, 40.0],
            [51.0, 55.0, 59.0],
        ],
        ss_factor: 86.8,
        ss_subjects: 608.4,
        ss_residual: 41.2,
        f: 8.4271844660194174757,
        p: 0.010733688449859619141,
        epsilon_gg: 0.58571191961574559708,
        epsilon_hf: 0.68181285864855369481,
        p_gg: 0.034330780066282366109,
        p_hf: 0.02609146767769774421,
        pairs: &[
            Pair {
                first: 0,
                second: 1,
                mean: -2.0,
                se: 1.7606816861659009146,
                t: -1.1359236684941296223,
                p_bonferroni: 0.95829065082798245974,
                ci: (-8.9736842230269067673, 4.9736842230269067673),
            },
            Pair {
                first: 0,
                second: 2,
                mean: -5.8,
                se: 1.6552945357246848593,
                t: -3.5039081413150263446,
                p_bonferroni: 0.074424701847470651697,
                ci: (-12.356268222101670913, 0.75626822210167091257),
            },
            Pair {
                first: 1,
                second: 0,
                mean: 2.0,
                se: 1.7606816861659009146,
                t: 1.1359236684941296223,
                p_bonferroni: 0.95829065082798245974,
                ci: (-4.9736842230269067673, 8.9736842230269067673),
            },
            Pair {
                first: 1,
                second: 2,
                mean: -3.8,
                se: 0.58309518948453004709,
                t: -6.5169462354153358204,
                p_bonferroni: 0.0085866445977410762845,
                ci: (-6.1095155446786428137, -1.4904844553213571863),
            },
            Pair {
                first: 2,
                second: 0,
                mean: 5.8,
                se: 1.6552945357246848593,
                t: 3.5039081413150263446,
                p_bonferroni: 0.074424701847470651697,
                ci: (-0.75626822210167091257, 12.356268222101670913),
            },
            Pair {
                first: 2,
                second: 1,
                mean: 3.8,
                se: 0.58309518948453004709,
                t: 6.5169462354153358204,
                p_bonferroni: 0.0085866445977410762845,
                ci: (1.4904844553213571863, 6.1095155446786428137),
            },
        ],
    },
    Dataset {
        name: "B",
        rows: &[
            [1.2, 2.9, 3.1],
            [2.0, 2.2, 4.8],
            [0.7, 1.9, 2.0],
            [3.1, 3.0, 5.5],
        ],
        ss_factor: 9.06,
        ss_subjects: 8.7066666666666666667,
        ss_residual: 3.0533333333333333333,
        f: 8.9017467248908296943,
        p: 0.016015173652788499729,
        epsilon_gg: 0.54984442865867883627,
        epsilon_hf: 0.63114807238438375476,
        p_gg: 0.05113094944839273626,
        p_hf: 0.041236100213770216109,
        pairs: &[
            Pair {
                first: 0,
                second: 1,
                mean: -0.75,
                se: 0.42130748865881793153,
                t: -1.7801724872907799924,
                p_bonferroni: 0.51926306806927213043,
                ci: (-2.7961460788668811711, 1.2961460788668811711),
            },
            Pair {
                first: 0,
                second: 2,
                mean: -2.1,
                se: 0.32403703492039301155,
                t: -6.480740698407860231,
                p_bonferroni: 0.022371299674469563402,
                ci: (-3.6737368222926215094, -0.52626317770737849057),
            },
            Pair {
                first: 1,
                second: 0,
                mean: 0.75,
                se: 0.42130748865881793153,
                t: 1.7801724872907799924,
                p_bonferroni: 0.51926306806927213043,
                ci: (-1.2961460788668811711, 2.7961460788668811711),
            },
            Pair {
                first: 1,
                second: 2,
                mean: -1.35,
                se: 0.69342146875715734025,
                t: -1.9468679018831800541,
                p_bonferroni: 0.44016716668171297605,
                ci: (-4.717710419333593778, 2.017710419333593778),
            },
            Pair {
                first: 2,
                second: 0,
                mean: 2.1,
                se: 0.32403703492039301155,
                t: 6.480740698407860231,
                p_bonferroni: 0.022371299674469563402,
                ci: (0.52626317770737849057, 3.6737368222926215094),
            },
            Pair {
                first: 2,
                second: 1,
                mean: 1.35,
                se: 0.69342146875715734025,
                t: 1.9468679018831800541,
                p_bonferroni: 0.44016716668171297605,
                ci: (-2.017710419333593778, 4.717710419333593778),
            },
        ],
    },
    Dataset {
        name: "C",
        rows: &[
            [10.1, 9.4, 11.0],
            [12.3, 11.0, 12.9],
            [9.8, 9.9, 10.2],
            [11.1, 10.0, 12.5],
            [10.5, 9.7, 10.6],
        ],
        ss_factor: 5.1893333333333333333,
        ss_subjects: 9.3666666666666666667,
        ss_residual: 1.6973333333333333333,
        f: 12.229379418695993716,
        p: 0.0036900505125504622627,
        epsilon_gg: 0.64535834169967738634,
        epsilon_hf: 0.82191171918201469495,
        p_gg: 0.0141699216019865343,
        p_hf: 0.007213992523392055284,
        pairs: &[
            Pair {
                first: 0,
                second: 1,
                mean: 0.76,
                se: 0.24,
                t: 3.1666666666666666667,
                p_bonferroni: 0.10189843337304757653,
                ci: (-0.19058875586484295388, 1.7105887558648429539),
            },
            Pair {
                first: 0,
                second: 2,
                mean: -0.68,
                se: 0.22226110770892868921,
                t: -3.0594646405277633333,
                p_bonferroni: 0.11303455084181723786,
                ci: (-1.5603287910590515749, 0.20032879105905157495),
            },
            Pair {
                first: 1,
                second: 0,
                mean: -0.76,
                se: 0.24,
                t: -3.1666666666666666667,
                p_bonferroni: 0.10189843337304757653,
                ci: (-1.7105887558648429539, 0.19058875586484295388),
            },
            Pair {
                first: 1,
                second: 2,
                mean: -1.44,
                se: 0.38418745424597092119,
                t: -3.7481702853265455726,
                p_bonferroni: 0.05993633824324879864,
                ci: (-2.9616844756273282271, 0.081684475627328227145),
            },
            Pair {
                first: 2,
                second: 0,
                mean: 0.68,
                se: 0.22226110770892868921,
                t: 3.0594646405277633333,
                p_bonferroni: 0.11303455084181723786,
                ci: (-0.20032879105905157495, 1.5603287910590515749),
            },
            Pair {
                first: 2,
                second: 1,
                mean: 1.44,
                se: 0.38418745424597092119,
                t: 3.7481702853265455726,
                p_bonferroni: 0.05993633824324879864,
                ci: (-0.081684475627328227145, 2.9616844756273282271),
            },
        ],
    },
];
