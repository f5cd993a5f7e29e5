use chartab_core::partitions::enumerate_patterns;
use chartab_core::{oracle_char, ColoredPattern, Engine, Partition};
use rand::seq::SliceRandom;
use rand::SeedableRng;

#[test]
fn engine_matches_oracle_exhaustively_to_four() {
    let engine = Engine::new();
    for n in 1..=4 {
        for label in enumerate_patterns(n, n) {
            for mu in Partition::all(n) {
                let fast = engine.char_value(&label, &mu).unwrap();
                let slow = oracle_char(&label, &mu).unwrap();
                assert_eq!(fast, slow, "{label} at {mu}");
            }
        }
    }
    let stats = engine.stats();
    assert!(stats.hits > 0, "{stats:?}");
}

#[test]
fn engine_matches_oracle_on_sampled_fives() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(5);
    let labels: Vec<ColoredPattern> = enumerate_patterns(5, 5);
    let classes = Partition::all(5);
    let engine = Engine::new();
    for label in labels.choose_multiple(&mut rng, 12) {
        let mu = classes.choose(&mut rng).unwrap();
        assert_eq!(
            engine.char_value(label, mu).unwrap(),
            oracle_char(label, mu).unwrap(),
            "{label} at {mu}"
        );
    }
}
