#include "gorfro/report.hpp"

#include <sstream>

namespace gorfro {

using nlohmann::json;

json betti_json(const BettiTable& bt) {
    json triples = json::array();
    for (const auto& [pq, b] : bt.nonzero) triples.push_back({pq.first, pq.second, b});
    return json{{"entries", triples},
                {"pd", bt.pd},
                {"regularity", bt.regularity},
                {"socle_degree", bt.socle_degree},
                {"type", bt.type},
                {"q_max", bt.q_max}};
}

namespace {

json theorem_json(const TheoremCheck& t) {
    if (!t.applies) return nullptr;
    return t.holds;
}

} // namespace

json report_json(const ExampleReport& r, bool include_timings) {
    json betti = json::array();
    for (const auto& [pq, b] : r.betti.nonzero) betti.push_back({pq.first, pq.second, b});

    json sub{{"applies", r.subcanonical.applies},
             {"holds", r.subcanonical.applies ? json(r.subcanonical.holds) : json(nullptr)},
             {"N", r.subcanonical.N ? json(*r.subcanonical.N) : json(nullptr)}};

    return json{{"example", r.example},
                {"field_mode", r.field.str()},
                {"n", r.n},
                {"dim", r.dim},
                {"codim", r.codim},
                {"pd", r.pd},
                {"type", r.type},
                {"betti", betti},
                {"cohen_macaulay", r.cohen_macaulay},
                {"gorenstein", r.gorenstein},
                {"frobenius", r.frobenius},
                {"subcanonical", sub},
                {"theorems",
                 {{"avramov_golod", theorem_json(r.avramov_golod)},
                  {"theorem1", theorem_json(r.theorem1)},
                  {"theorem2", theorem_json(r.theorem2)}}},
                {"runtime_ms", include_timings ? r.runtime_ms : 0}};
}

std::string report_text(const ExampleReport& r, bool include_timings) {
    std::ostringstream os;
    os << "example: " << r.example << "  [" << r.field.str() << "]\n";
    os << "n=" << r.n << " dim=" << r.dim << " codim=" << r.codim << " pd=" << r.pd
       << " type=" << r.type << " regularity=" << r.betti.regularity
       << " socle=" << r.betti.socle_degree << "\n";
    os << "N(t) = " << r.numerator.str() << "\n";
    os << "betti (rows q-p, cols p):\n" << r.betti.render_text();
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    os << "cohen_macaulay: " << yn(r.cohen_macaulay) << "\n";
    os << "gorenstein: " << yn(r.gorenstein) << "\n";
    os << "frobenius: " << yn(r.frobenius) << "\n";
    for (const auto& w : r.witnesses) os << "  witness: " << w << "\n";
    if (r.subcanonical.applies) {
        os << "subcanonical (classical): " << yn(r.subcanonical.holds);
        if (r.subcanonical.N) os << ", N=" << *r.subcanonical.N;
        os << "\n";
    } else {
        os << "subcanonical (classical): not applicable\n";
    }
    if (r.subcanonical.root_theoretic) {
        os << "subcanonical (root-theoretic): " << yn(*r.subcanonical.root_theoretic);
        if (r.subcanonical.root_N) os << ", N=" << *r.subcanonical.root_N;
        os << "\n";
    }
    auto theorem_line = [&](const char* name, const TheoremCheck& t) {
        os << name << ": ";
        if (!t.applies)
            os << "n/a";
        else
            os << (t.holds ? "ok" : "FAILED");
        os << " (" << t.detail << ")\n";
    };
    theorem_line("avramov_golod", r.avramov_golod);
    theorem_line("theorem1", r.theorem1);
    theorem_line("theorem2", r.theorem2);
    if (!r.notes.empty()) os << "note: " << r.notes << "\n";
    if (include_timings) os << "runtime_ms: " << r.runtime_ms << "\n";
    if (!r.all_theorems_hold()) os << "RESULT: FAILED\n";
    return os.str();
}

int report_exit_code(const ExampleReport& r) { return r.all_theorems_hold() ? 0 : 1; }

} // namespace gorfro
