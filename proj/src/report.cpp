#include "spencer/report.hpp"

namespace spencer {

Json weight_json(const Weight& w) {
    Json a = Json::array();
    for (const auto& c : w) a.push_back(c.str());
    return a;
}

Json sdim_json(const SDim& d) { return Json::array({d.even, d.odd}); }

Json graded_json(const GradedAlgebra& g) {
    Json comp = Json::object();
    for (const auto& [d, sp] : g.comp) comp[std::to_string(d)] = sdim_json(sp.sdim());
    Json j;
    j["components"] = comp;
    j["cutoff"] = g.cutoff;
    j["stabilized"] = g.stabilized;
    return j;
}

Json cohomology_json(const SpencerComplex& sc, const CohomologyReport& rep) {
    Json classes = Json::array();
    CochainSpace C = sc.cochains(rep.k, rep.s);
    for (const auto& cls : rep.classes) {
        Json c;
        c["parity"] = is_odd(cls.parity) ? 1 : 0;
        c["weight"] = weight_json(cls.weight);
        Json support = Json::array();
        Json coeff = Json::array();
        for (size_t t = 0; t < cls.rep.size(); ++t) {
            if (cls.rep[t].is_zero()) continue;
            const auto& ref = C.basis[t];
            const auto& g = sc.graded();
            std::string label = g.comp.at(rep.k - rep.s).labels[ref.coef];
            for (int j : ref.J) label += " d(" + g.comp.at(-1).labels[j] + ")";
            support.push_back(label);
            coeff.push_back(cls.rep[t].str());
        }
        c["support"] = support;
        c["coefficients"] = coeff;
        classes.push_back(std::move(c));
    }
    Json j;
    j["k"] = rep.k;
    j["s"] = rep.s;
    j["sdim"] = sdim_json(rep.sdim);
    j["cochain_sdim"] = sdim_json(rep.cochain_sdim);
    j["classes"] = classes;
    return j;
}

Json module_report_json(const Module& m, const ModuleReport& rep) {
    Json j;
    j["sdim"] = sdim_json(rep.sdim);
    j["split"] = rep.split;
    Json hw = Json::array();
    for (const auto& w : rep.hwvs) {
        Json e;
        e["weight"] = weight_json(w.weight);
        e["parity"] = is_odd(w.parity) ? 1 : 0;
        hw.push_back(std::move(e));
    }
    j["hwvs"] = hw;
    Json layers = Json::array();
    for (const auto& l : rep.layers) {
        Json e;
        e["sdim"] = sdim_json(l.sdim);
        e["type"] = l.type_tag;
        Json lw = Json::array();
        for (const auto& w : l.hwvs) {
            Json x;
            x["weight"] = weight_json(w.weight);
            x["parity"] = is_odd(w.parity) ? 1 : 0;
            lw.push_back(std::move(x));
        }
        e["hwvs"] = lw;
        layers.push_back(std::move(e));
    }
    j["layers"] = layers;
    (void)m;
    return j;
}

Json involutivity_json(const InvolutivityReport& rep) {
    Json j;
    j["involutive"] = rep.involutive;
    j["cond1"] = rep.cond1;
    j["cond2"] = rep.cond2;
    j["cond3"] = rep.cond3;
    Json chain = Json::array();
    for (const auto& step : rep.chain) {
        Json e = Json::object();
        for (const auto& [d, sd] : step) e[std::to_string(d)] = sdim_json(sd);
        chain.push_back(std::move(e));
    }
    j["chain"] = chain;
    return j;
}

Json scan_json(const std::vector<std::vector<SDim>>& table) {
    Json rows = Json::array();
    for (const auto& row : table) {
        Json r = Json::array();
        for (const auto& d : row) r.push_back(sdim_json(d));
        rows.push_back(std::move(r));
    }
    return rows;
}

std::string dump_sorted(const Json& j) { return j.dump(2); }

bool json_equal(const Json& a, const Json& b, std::string* diff_path) {
    if (a == b) return true;
    if (diff_path) {
        // descend to the first difference
        std::string path;
        const Json* x = &a;
        const Json* y = &b;
        while (true) {
            if (x->is_object() && y->is_object()) {
                bool moved = false;
                for (auto it = x->begin(); it != x->end(); ++it) {
                    if (!y->contains(it.key())) {
                        path += "/" + it.key() + " (missing)";
                        moved = false;
                        break;
                    }
                    if (*it != (*y)[it.key()]) {
                        path += "/" + it.key();
                        x = &*it;
                        y = &(*y)[it.key()];
                        moved = true;
                        break;
                    }
                }
                if (moved) continue;
                break;
            }
            if (x->is_array() && y->is_array()) {
                bool moved = false;
                for (size_t i = 0; i < std::min(x->size(), y->size()); ++i) {
                    if ((*x)[i] != (*y)[i]) {
                        path += "/" + std::to_string(i);
                        x = &(*x)[i];
                        y = &(*y)[i];
                        moved = true;
                        break;
                    }
                }
                if (!moved) path += " (length)";
                if (moved) continue;
                break;
            }
            path += ": " + x->dump() + " != " + y->dump();
            break;
        }
        *diff_path = path;
    }
    return false;
}

}  // namespace spencer
