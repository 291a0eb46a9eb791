#include "twodist/serialization.hpp"

#include "twodist/errors.hpp"

namespace twodist::io {

json indices_json(const BitMask& m) {
    json out = json::array();
    for (int i : m.indices()) out.push_back(i + 1);
    return out;
}

BitMask indices_from_json(const json& j, int limit) {
    if (!j.is_array()) throw ParseError("index list must be an array");
    BitMask m;
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw ParseError("indices must be integers");
        const int i = e.get<int>();
        if (i < 1 || i > limit) throw ParseError("index " + std::to_string(i) + " outside 1.." + std::to_string(limit));
        if (m.test(i - 1)) throw ParseError("repeated index " + std::to_string(i));
        m.set(i - 1);
    }
    return m;
}

json param_json(const paramspace::ParamTuple& p) {
    return json{{"d", p.d},
                {"k", p.k},
                {"kPrime", p.k_prime},
                {"s", p.s},
                {"branch", paramspace::to_string(p.branch)},
                {"beta", p.beta.to_string()},
                {"alpha", p.alpha.to_string()}};
}

json design_json(const designs::Design& d) {
    json blocks = json::array();
    for (const auto& b : d.blocks) blocks.push_back(indices_json(b));
    json out{{"v", d.v}, {"blocks", blocks}};
    if (d.declared) {
        out["declared"] = json{{"t", d.declared->t}, {"k", d.declared->block_size}, {"lambda", d.declared->lambda}};
    }
    return out;
}

namespace {

template <class T>
T field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw ParseError(std::string("field '") + key + "' has the wrong type");
    }
}

}  // namespace

designs::Design design_from_json(const json& j) {
    designs::Design d;
    d.v = field<int>(j, "v");
    if (d.v < 1 || d.v > BitMask::kMaxBits) throw ParseError("design point count out of range");
    for (const auto& b : field<json>(j, "blocks")) d.blocks.push_back(indices_from_json(b, d.v));
    if (j.contains("declared")) {
        const json& dec = j.at("declared");
        d.declared = designs::DesignParams{field<int>(dec, "t"), field<int>(dec, "k"), field<int>(dec, "lambda")};
    }
    try {
        d.canonicalize();
    } catch (const ShapeError& e) {
        throw ParseError(e.what());
    }
    return d;
}

json instance_json(const searcher::Instance& inst) {
    const auto& p = inst.params;
    json families = json::array();
    for (const auto& f : inst.families) {
        json blocks = json::array();
        for (std::size_t i = 0; i < f.members.size(); ++i) blocks.push_back(indices_json(f.suffix(i)));
        json fam{{"prefix", f.prefix}, {"blocks", blocks}};
        if (!f.label.empty()) fam["label"] = f.label;
        families.push_back(fam);
    }
    json extras = json::array();
    for (const auto& e : inst.extras) extras.push_back(indices_json(e.base));
    return json{{"name", inst.name},
                {"d", p.d},
                {"s", p.s},
                {"branch", paramspace::to_string(p.branch)},
                {"k", p.k},
                {"kPrime", p.k_prime},
                {"beta", p.beta.to_string()},
                {"alpha", p.alpha.to_string()},
                {"simplex", inst.include_simplex},
                {"families", families},
                {"extras", extras}};
}

searcher::Instance instance_from_json(const json& j, std::optional<paramspace::MSetRule> m_rule) {
    if (!j.is_object()) throw ParseError("instance must be a JSON object");
    const int d = field<int>(j, "d");
    const int s = field<int>(j, "s");
    const int k = field<int>(j, "k");
    paramspace::Branch branch;
    paramspace::ParamTuple params;
    try {
        branch = paramspace::parse_branch(field<std::string>(j, "branch"));
        params = paramspace::param_tuple(s, branch, d, k);
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
    if (j.contains("kPrime") && field<int>(j, "kPrime") != params.k_prime) throw ParseError("kPrime does not match (s, d, k)");
    try {
        if (j.contains("beta") && Rational::parse(field<std::string>(j, "beta")) != params.beta) {
            throw ParseError("beta does not match (s, branch)");
        }
        if (j.contains("alpha") && Rational::parse(field<std::string>(j, "alpha")) != params.alpha) {
            throw ParseError("alpha does not match (s, branch)");
        }
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
    const int n = d + 1;
    std::vector<designs::PaddedFamily> families;
    if (j.contains("families")) {
        for (const auto& f : field<json>(j, "families")) {
            designs::PaddedFamily fam;
            fam.ambient = n;
            fam.prefix = f.contains("prefix") ? field<std::vector<int>>(f, "prefix") : std::vector<int>{};
            const int p = static_cast<int>(fam.prefix.size());
            if (p > n) throw ParseError("prefix longer than the ambient dimension");
            BitMask head;
            for (int i = 0; i < p; ++i) {
                if (fam.prefix[i] != 0 && fam.prefix[i] != 1) throw ParseError("prefix entries must be 0 or 1");
                if (fam.prefix[i]) head.set(i);
            }
            for (const auto& b : field<json>(f, "blocks")) {
                const BitMask suffix = indices_from_json(b, n - p);
                const BitMask full = head | suffix.shifted(p);
                if (full.empty()) throw ParseError("empty member vector");
                fam.members.push_back(CandidateVector::make(n, full));
            }
            if (f.contains("label")) fam.label = field<std::string>(f, "label");
            families.push_back(std::move(fam));
        }
    }
    std::vector<CandidateVector> extras;
    if (j.contains("extras")) {
        for (const auto& e : field<json>(j, "extras")) {
            const BitMask m = indices_from_json(e, n);
            if (m.empty()) throw ParseError("empty extra vector");
            extras.push_back(CandidateVector::make(n, m));
        }
    }
    const bool simplex = j.contains("simplex") ? field<bool>(j, "simplex") : true;
    const std::string name = j.contains("name") ? field<std::string>(j, "name") : std::string("unnamed");
    return searcher::make_instance(name, params, simplex, std::move(families), std::move(extras), m_rule);
}

json report_json(const searcher::Report& r) {
    json spectrum = json::array();
    for (const auto& x : r.spectrum) spectrum.push_back(x.to_string());
    json out{{"valid", r.valid}, {"points", r.points}, {"spectrum", spectrum}, {"exactGeometry", r.exact_geometry}};
    if (r.exact_geometry) {
        json exact = json::array();
        for (const auto& x : r.exact_spectrum) exact.push_back(x.to_string());
        out["exactSpectrum"] = exact;
    }
    if (r.violation) {
        const auto& v = *r.violation;
        out["violation"] = json{{"first", v.first},
                                {"second", v.second},
                                {"kind", v.kind},
                                {"value", v.value},
                                {"squaredDistance", v.squared_distance ? json(v.squared_distance->to_string()) : json(nullptr)}};
    } else {
        out["violation"] = nullptr;
    }
    out["warnings"] = r.warnings;
    return out;
}

json maximality_json(const searcher::MaximalityReport& r) {
    json extensions = json::array();
    for (const auto& e : r.extensions) extensions.push_back(indices_json(e.base));
    json cases = json::array();
    for (const auto& c : r.cases) {
        cases.push_back(json{{"weight", c.weight},
                             {"classCounts", c.class_counts},
                             {"suffixWeight", c.suffix_weight},
                             {"pruned", c.pruned},
                             {"scanned", c.scanned},
                             {"hits", c.hits}});
    }
    json classes = json::array();
    for (const auto& c : r.classes) {
        json pos = json::array();
        for (int p : c.positions) pos.push_back(p + 1);
        classes.push_back(pos);
    }
    return json{{"verdict", searcher::to_string(r.verdict)},
                {"counterexample", r.counterexample ? indices_json(r.counterexample->base) : json(nullptr)},
                {"scanned", r.scanned},
                {"method", searcher::to_string(r.method)},
                {"extensionCount", r.extension_count},
                {"extensions", extensions},
                {"classes", classes},
                {"cases", cases}};
}

}  // namespace twodist::io
