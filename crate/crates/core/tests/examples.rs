macro_rules! example {
    ($name:ident) => {
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", stringify!($name), ".rs"));

            #[test]
            fn runs() {
                main().unwrap();
            }
        }
    };
}

example!(graded_algebra);
example!(poisson_bracket);
example!(supercharges_1d);
example!(first_integrals);
example!(nambu_bracket);
example!(susy_2d);
example!(pais_uhlenbeck);
example!(isotonic);
example!(exact_flow);
example!(verify_suite);
example!(parser);
