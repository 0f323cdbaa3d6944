//! Runs every cargo example.

macro_rules! example {
    ($name:ident, $file:literal) => {
        mod $name {
            include!(concat!("../examples/", $file));

            #[test]
            fn runs() {
                main();
            }
        }
    };
}

example!(milnor_numbers, "milnor_numbers.rs");
example!(family_check, "family_check.rs");
example!(certificates, "certificates.rs");
example!(arc_valuations, "arc_valuations.rs");
example!(newton_polyhedron, "newton_polyhedron.rs");
example!(problem_file, "problem_file.rs");
