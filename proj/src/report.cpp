#include "ska/report.hpp"

namespace ska {

namespace {

Json polys_json(const std::vector<Polynomial>& polys) {
    Json arr = Json::array();
    for (const auto& p : polys) arr.push_back(p.str());
    return arr;
}

Json vars_json(const RingPtr& ring, const std::vector<int>& idxs) {
    Json arr = Json::array();
    for (int v : idxs) arr.push_back(ring->var_name(static_cast<size_t>(v)));
    return arr;
}

}  // namespace

std::string verdict_name(SkVerdict v) {
    switch (v) {
        case SkVerdict::certified: return "certified";
        case SkVerdict::refuted: return "counterexample";
        case SkVerdict::no_counterexample_found: return "no-counterexample-found";
        case SkVerdict::inconclusive: return "inconclusive";
    }
    return "?";
}

Json to_json(const UniversalGBReport& rep) {
    Json j;
    j["mode"] = rep.mode == SweepMode::exhaustive ? "exhaustive" : "sampled";
    if (rep.mode == SweepMode::sampled) {
        j["sample_count"] = rep.sample_count;
        j["seed"] = rep.seed;
    }
    j["orders_checked"] = rep.orders_checked;
    j["universal"] = rep.universal;
    j["tidy"] = rep.is_tidy_set;
    j["quadratic"] = rep.is_quadratic;
    if (rep.witness) {
        const RingPtr& ring = rep.candidate.front().ring();
        Json w;
        Json perm = Json::array();
        for (int v : rep.witness->ranked) perm.push_back(ring->var_name(static_cast<size_t>(v)));
        w["order"] = perm;
        w["spair"] = {rep.witness->pair_i, rep.witness->pair_j};
        w["remainder"] = rep.witness->remainder.str();
        j["witness"] = w;
    }
    return j;
}

Json to_json(const StrongKoszulCertificate& cert) {
    const RingPtr& ring = cert.ideal.ring;
    Json j;
    j["schema"] = kSchemaVersion;
    j["ideal_hash"] = cert.ideal.fingerprint();
    switch (cert.mode) {
        case SkMode::exhaustive: j["mode"] = "exhaustive"; break;
        case SkMode::sampled:
            j["mode"] = "sampled";
            j["sample_count"] = cert.sample_count;
            j["seed"] = cert.seed;
            break;
        case SkMode::theorem_shortcut: j["mode"] = "theorem-shortcut"; break;
    }
    j["pairs_checked"] = cert.pairs_checked;
    j["verdict"] = verdict_name(cert.verdict);
    if (!cert.pairs.empty()) {
        Json pairs = Json::array();
        for (const auto& rec : cert.pairs) {
            Json p;
            p["Y"] = vars_json(ring, rec.Y);
            p["x"] = ring->var_name(static_cast<size_t>(rec.x));
            p["V"] = vars_json(ring, rec.V);
            pairs.push_back(p);
        }
        j["pairs"] = pairs;
    }
    if (cert.witness) {
        Json w;
        w["Y"] = vars_json(ring, cert.witness->Y);
        w["x"] = ring->var_name(static_cast<size_t>(cert.witness->x));
        w["offending_colon_generator"] = cert.witness->offending.str();
        w["colon_generators"] = polys_json(cert.witness->colon_gens);
        j["witness"] = w;
    }
    if (cert.theorem_universality) j["universality"] = to_json(*cert.theorem_universality);
    return j;
}

Json to_json(const ObstructionReport& rep) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["ideal_hash"] = rep.ideal.fingerprint();
    j["quadric_space_dim"] = rep.quadric_space_dim;
    j["perp_basis"] = polys_json(rep.perp_basis);
    j["artinian"] = rep.artinian;
    j["quadratically_generated"] = rep.quadratically_generated;
    j["perp_ideal_artinian"] = rep.perp_ideal_artinian;
    j["conclusion"] = rep.conclusion == ObstructionConclusion::no_quadratic_gb_any_coordinates
                          ? "no-quadratic-GB-after-any-linear-change"
                          : "inconclusive";
    if (!rep.excluded_primes.empty()) {
        j["excluded_characteristics"] = rep.excluded_primes;
        j["prime_scan_bound"] = rep.prime_scan_bound;
    }
    j["caveat"] = rep.caveat;
    return j;
}

Json to_json(const CayleyReport& rep) {
    Json j;
    j["quadratic_generators"] = rep.quadratic_count;
    j["all_degree4_in_ideal"] = rep.all_degree4_in_J;
    j["at_least_351_quadrics"] = rep.at_least_351_quadrics;
    j["one_standard_cubic"] = rep.one_standard_cubic;
    j["hilbert_function"] = rep.hf;
    j["ok"] = rep.ok();
    return j;
}

Json to_json(const LinesLemmaReport& rep) {
    Json j;
    j["four_subsets_have_skew_pair"] = rep.four_subsets_have_skew_pair;
    j["four_subsets_checked"] = rep.four_subsets_checked;
    j["coplanar_triples_share_plane"] = rep.coplanar_triples_share_plane;
    j["planes_meet_through_lines"] = rep.planes_meet_through_lines;
    j["line_plane_pairs_checked"] = rep.line_plane_pairs_checked;
    j["ok"] = rep.ok();
    return j;
}

Json run_report(const std::string& command, const Json& inputs, const Json& body,
                double wall_seconds) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["tool_version"] = kToolVersion;
    j["command"] = command;
    j["inputs"] = inputs;
    j["wall_time_s"] = wall_seconds;
    j["result"] = body;
    return j;
}

}  // namespace ska
