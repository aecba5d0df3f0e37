macro_rules! example {
    ($name:ident) => {
        mod $name {
            include!(concat!(
                env!("CARGO_MANIFEST_DIR"),
                "/examples/",
                stringify!($name),
                ".rs"
            ));
        }

        #[test]
        fn $name() {
            $name::run_example();
        }
    };
}

example!(reference_bounds);
example!(derivative_estimates);
example!(classical_limit);
example!(contraction);
example!(positivity_check);
example!(error_bound);
example!(custom_config);
example!(panels);
