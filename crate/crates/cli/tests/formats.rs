use cicy::json::{Check, Input, Provenance, Report};
use cicy::text::{parse, render};
use cicy_core::ConfigurationMatrix;
use proptest::prelude::*;
use serde_json::Value;

fn matrix() -> impl Strategy<Value = ConfigurationMatrix> {
    (1usize..6, 1usize..8).prop_flat_map(|(k, m)| {
        (
            prop::collection::vec(1u32..9, k),
            prop::collection::vec(prop::collection::vec(-3i64..9, m), k),
        )
            .prop_map(|(dims, rows)| ConfigurationMatrix::new(dims, rows).unwrap())
    })
}

fn json_value() -> impl Strategy<Value = Value> {
    prop_oneof![
        any::<i64>().prop_map(Value::from),
        any::<bool>().prop_map(Value::from),
        "[a-z0-9 /*^+-]{0,12}".prop_map(Value::from),
        Just(Value::Null),
    ]
}

fn report() -> impl Strategy<Value = Report> {
    let check = ("[a-z_]{1,10}", json_value(), json_value(), 0..3u8).prop_map(
        |(name, expected, got, p)| {
            let pass = expected == got;
            Check {
                name,
                expected,
                got,
                provenance: [
                    Provenance::Literature,
                    Provenance::Trivial,
                    Provenance::Derived,
                ][p as usize],
                pass,
            }
        },
    );
    (
        prop::option::of("[a-z./]{1,12}"),
        prop::collection::btree_map("[a-z_]{1,8}", json_value(), 0..6),
        prop::collection::vec(check, 0..5),
    )
        .prop_map(|(source, results, checks)| Report {
            tool_version: cicy::json::TOOL_VERSION.to_owned(),
            input: Input {
                source,
                ..Input::default()
            },
            results,
            checks,
        })
}

proptest! {
    #[test]
    fn text_round_trip(cfg in matrix()) {
        prop_assert_eq!(parse(&render(&cfg)).unwrap(), cfg);
    }

    #[test]
    fn text_tolerates_layout(cfg in matrix(), pad in "[ \t]{0,3}") {
        let mut text = String::from("# generated\n\n");
        for (n, row) in cfg.dims().iter().zip(cfg.rows()) {
            let entries: Vec<String> = row.iter().map(i64::to_string).collect();
            text.push_str(&format!("{}{}{}|{}{}\n", pad, n, pad, pad, entries.join(&format!(" {}", pad))));
        }
        prop_assert_eq!(parse(&text).unwrap(), cfg);
    }

    #[test]
    fn report_round_trip(r in report()) {
        prop_assert_eq!(Report::from_json(&r.to_json()).unwrap(), r);
    }
}
