use tcorelab::tables::{render_table, table1_json, table2_json, TABLE1_GOLDEN, TABLE2_GOLDEN};
use tcorelab_core::enumerate::DEFAULT_MAX_N;

#[test]
fn text_matches_golden_files() {
    assert_eq!(render_table("table1", false, DEFAULT_MAX_N).unwrap(), TABLE1_GOLDEN);
    assert_eq!(render_table("table2", false, DEFAULT_MAX_N).unwrap(), TABLE2_GOLDEN);
}

#[test]
fn table1_class_sizes() {
    let v = table1_json(DEFAULT_MAX_N).unwrap();
    let cells = v["cells"].as_array().unwrap();
    assert_eq!(cells.len(), 10);
    let mut total = 0;
    for c in cells {
        let size = c["members"].as_array().unwrap().len();
        // 4 per column in srank class 0, 2 in class 2
        let want = if c["srank_mod4"] == 0 { 4 } else { 2 };
        assert_eq!(size, want, "{c}");
        total += size;
    }
    assert_eq!(total, 30);
    let first = &cells[0];
    assert_eq!((first["srank_mod4"].as_i64(), first["st_crank_mod5"].as_i64()), (Some(0), Some(0)));
    assert!(first["members"].as_array().unwrap().iter().any(|m| m == "3,3,3"));
}

#[test]
fn table2_orbits() {
    let v = table2_json(DEFAULT_MAX_N).unwrap();
    let orbits = v["orbits"].as_array().unwrap();
    assert_eq!(orbits.len(), 6);
    let first = orbits[0]["members"].as_array().unwrap();
    assert!(first.iter().all(|m| m["quotient"].as_array().unwrap().iter().all(|q| q == "")));
    let mut seen: Vec<&str> = orbits
        .iter()
        .flat_map(|o| o["members"].as_array().unwrap().iter().map(|m| m["partition"].as_str().unwrap()))
        .collect();
    seen.sort();
    seen.dedup();
    assert_eq!(seen.len(), 30);
    assert!(TABLE2_GOLDEN.contains("(9^1)->((4^1),3)"));
}

#[test]
fn json_is_one_line() {
    let s = render_table("table2", true, DEFAULT_MAX_N).unwrap();
    assert_eq!(s.lines().count(), 1);
    assert!(render_table("table9", false, DEFAULT_MAX_N).is_err());
}
