//! Every example runs to completion.

macro_rules! example {
    ($name:ident) => {
        #[allow(dead_code)]
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", stringify!($name), ".rs"));
        }

        #[test]
        fn $name() {
            $name::run().expect(stringify!($name));
        }
    };
}

example!(surface_word_problem);
example!(mcg_equality);
example!(hurwitz_certificates);
example!(bounded_search);
example!(invariance);
example!(square_to_cube);
example!(sigma_exchange);
example!(transport_sigma);
example!(stable_reduce);
example!(braid_lift);
example!(frozen_certificates);
