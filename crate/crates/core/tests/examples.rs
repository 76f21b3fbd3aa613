macro_rules! example {
    ($test:ident, $file:literal) => {
        #[test]
        fn $test() {
            mod inner {
                include!($file);
                pub fn run() {
                    main()
                }
            }
            inner::run();
        }
    };
}

example!(partitions, "../examples/partitions.rs");
example!(content_sequences, "../examples/content_sequences.rs");
example!(tabloids, "../examples/tabloids.rs");
example!(bijection, "../examples/bijection.rs");
example!(schur, "../examples/schur.rs");
example!(verify_all, "../examples/verify_all.rs");
