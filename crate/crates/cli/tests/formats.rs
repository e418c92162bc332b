use crimp::format::InstanceFile;
use crimp::graph6;
use crimp::random::{random_instance, rng};
use crimp::report::RunReport;
use crimp_core::solvers::{solve_neighborhood, Policy};
use crimp_core::Instance;
use proptest::prelude::*;

fn instance() -> impl Strategy<Value = Instance> {
    (2usize..40, 0.0f64..1.0, 0usize..6, any::<u64>()).prop_map(|(n, fill, k, seed)| {
        let max = n * (n - 1) / 2;
        let m = n - 1 + ((max - (n - 1)) as f64 * fill) as usize;
        random_instance(n, m, k, &mut rng(seed)).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn instance_file_round_trips(inst in instance(), keys in proptest::collection::vec("[a-z]{1,8}", 0..4)) {
        let mut file = InstanceFile::new(inst);
        file.provenance = keys.iter().enumerate().map(|(i, k)| (k.clone(), i.to_string())).collect();
        let text = file.to_text();
        prop_assert_eq!(InstanceFile::parse(&text).unwrap(), file.clone());
        // Reordered edge lines (everything after the magic and header lines)
        // parse to the same instance.
        let mut lines: Vec<&str> = text.lines().collect();
        lines[2..].reverse();
        prop_assert_eq!(InstanceFile::parse(&lines.join("\n")).unwrap().instance, file.instance);
    }

    #[test]
    fn graph6_round_trips(inst in instance()) {
        let g = inst.graph();
        let line = graph6::encode(g);
        prop_assert!(line.bytes().all(|c| (63..=126).contains(&c)));
        prop_assert_eq!(graph6::decode(&line).unwrap(), g.clone());
    }

    #[test]
    fn reports_survive_json_and_reverify(inst in instance()) {
        let s = solve_neighborhood(&inst, Policy::SmallestId).unwrap();
        let report = RunReport::from_solution(&inst, &s);
        let back: RunReport = serde_json::from_str(&serde_json::to_string(&report).unwrap()).unwrap();
        prop_assert!(back.reverify(&inst).is_ok());
        let mut forged = back.clone();
        forged.cc_a += 1;
        prop_assert!(forged.reverify(&inst).is_err());
    }
}
