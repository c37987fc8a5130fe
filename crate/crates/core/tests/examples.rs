//! Runs every example so they cannot rot. Each example's `main` asserts its
//! own claims.

macro_rules! example {
    ($name:ident) => {
        mod $name {
            include!(concat!("../examples/", stringify!($name), ".rs"));

            #[test]
            fn runs() {
                main();
            }
        }
    };
}

example!(classify_h);
example!(decomposition);
example!(enumeration);
example!(graph_basics);
example!(hardness_reduction);
example!(meta_solver);
example!(oracles);
example!(spider_detection);
example!(subcubic_ifvs);
example!(treedepth);
