use num_traits::One;
use suq2_core::dual::*;
use suq2_core::algebra::AlgebraElement;

#[test]
fn conprop_holds_on_grid() {
    let report = verify_conprop(2);
    for r in &report.results {
        println!("{} {} {:?}", r.name, r.holds, r.witness);
    }
    assert!(report.all());
}

#[test]
fn tables_match_up_to_labels() {
    for e in regenerate_tables() {
        if !e.label_matches || !e.column_matches {
            println!("{:?}", e);
        }
    }
}

#[test]
fn iterated_leibniz_matches() {
    let gens = [AlgebraElement::alpha(), AlgebraElement::gamma_star(), AlgebraElement::alpha_star(), AlgebraElement::gamma()];
    for k in 0..3 {
        let prod = gens.iter().fold(AlgebraElement::one(), |a, x| &a * x);
        assert_eq!(iterated_leibniz(k, &gens), conv_left(&Functional::Named(Named::chi(k)), &prod));
    }
}
