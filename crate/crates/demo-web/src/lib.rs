//! Browser bindings. Each operation returns a rendered report as JSON; the
//! plain functions carry the logic so they can be tested natively.

use mixlr_core::display::DEFAULT_SIG_FIGS;
use mixlr_core::scenario::{self, parse_scenario};
use mixlr_core::{parse_rational, Error};
use wasm_bindgen::prelude::*;

fn message(e: Error) -> String {
    e.to_string()
}

/// Prior and two likelihoods, each as a fraction or decimal string.
pub fn screening(prior: &str, p_e_given_h: &str, p_e_given_not_h: &str, sig_figs: usize) -> Result<String, String> {
    let text = serde_json::json!({
        "kind": "screening",
        "title": "Bayes update",
        "prior": prior,
        "p_e_given_h": p_e_given_h,
        "p_e_given_not_h": p_e_given_not_h,
        "sig_figs": sig_figs,
    })
    .to_string();
    let report = parse_scenario(&text).and_then(|s| s.run()).map_err(message)?;
    Ok(report.to_json())
}

pub fn two_contributor(n_positions: u32, alphabet_size: u32) -> Result<String, String> {
    let report = scenario::ball_two_report(None, n_positions, alphabet_size, 0, DEFAULT_SIG_FIGS).map_err(message)?;
    Ok(report.to_json())
}

/// `k_list` uses the CLI syntax, e.g. `1..10,20`.
pub fn contributor_table(k_list: &str, n_pots: u32, freq: &str) -> Result<String, String> {
    let ks = scenario::parse_k_list(k_list).map_err(message)?;
    let freq = parse_rational(freq).map_err(message)?;
    let report = scenario::contributor_table_report(None, &ks, n_pots, &freq, DEFAULT_SIG_FIGS).map_err(message)?;
    Ok(report.to_json())
}

#[wasm_bindgen(js_name = screening)]
pub fn screening_js(prior: &str, p_e_given_h: &str, p_e_given_not_h: &str, sig_figs: usize) -> Result<String, JsError> {
    screening(prior, p_e_given_h, p_e_given_not_h, sig_figs).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = twoContributor)]
pub fn two_contributor_js(n_positions: u32, alphabet_size: u32) -> Result<String, JsError> {
    two_contributor(n_positions, alphabet_size).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = contributorTable)]
pub fn contributor_table_js(k_list: &str, n_pots: u32, freq: &str) -> Result<String, JsError> {
    contributor_table(k_list, n_pots, freq).map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use mixlr_core::report::RenderedReport;

    #[test]
    fn screening_matches_cli_numbers() {
        let json = screening("1/200", "1", "1/50", 4).unwrap();
        let report = RenderedReport::from_json(&json).unwrap();
        assert!(report.numbers().contains(&("50/249", "0.2008")));
    }

    #[test]
    fn bad_input_is_reported() {
        assert!(screening("2", "1", "1/2", 3).unwrap_err().contains("prior"));
        assert!(two_contributor(1, 2).is_err());
        assert!(contributor_table("3..1", 20, "1/10").is_err());
    }

    #[test]
    fn table_has_one_row_per_k() {
        let report = RenderedReport::from_json(&contributor_table("1..3,80", 20, "1/10").unwrap()).unwrap();
        assert_eq!(report.tables[0].rows.len(), 4);
        let report = RenderedReport::from_json(&two_contributor(3, 10).unwrap()).unwrap();
        assert!(report.numbers().contains(&("997/6", "166")));
    }
}
