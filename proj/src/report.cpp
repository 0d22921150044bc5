#include "thl/report.hpp"

#include "thl/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace thl {

using nlohmann::json;

void Report::add_table(std::string theory, std::vector<std::size_t> dims) {
    for (const auto& t : tables)
        if (t.theory == theory && t.dims == dims) return;
    tables.push_back({std::move(theory), std::move(dims)});
}

void Report::add_check(std::string check, std::string location, bool pass, std::string detail) {
    checks.push_back({std::move(check), std::move(location), pass ? "pass" : "fail", std::move(detail)});
}

void Report::skip(std::string check, std::string location, std::string reason) {
    checks.push_back({std::move(check), std::move(location), "skipped", std::move(reason)});
}

void Report::add_sequence(const std::string& name, const ExactnessReport& r) {
    for (const auto& n : r.nodes) nodes.push_back({name, n});
    for (const auto& n : r.notes) notes.push_back(name + ": " + n);
}

bool Report::passed() const {
    for (const auto& c : checks)
        if (c.verdict == "fail") return false;
    for (const auto& n : nodes)
        if (!n.node.exact || !n.node.composite_zero) return false;
    return true;
}

namespace {

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s : s + std::string(w - s.size(), ' '); }

std::string node_verdict(const ExactnessNode& n) { return n.exact ? "exact" : "inexact"; }

} // namespace

std::string emit_human(const Report& r) {
    std::ostringstream out;
    out << "job: " << r.job << "\ncommand: " << r.command << "\nmax degree: " << r.max_degree << "\n";

    if (!r.tables.empty()) {
        std::size_t w = 6, deg = 0;
        for (const auto& t : r.tables) {
            w = std::max(w, t.theory.size());
            deg = std::max(deg, t.dims.size());
        }
        out << "\ndimensions\n  " << pad("theory", w);
        for (std::size_t n = 0; n < deg; ++n) out << "  " << std::setw(4) << ("n=" + std::to_string(n));
        out << "\n";
        for (const auto& t : r.tables) {
            out << "  " << pad(t.theory, w);
            for (std::size_t n = 0; n < deg; ++n)
                out << "  " << std::setw(4) << (n < t.dims.size() ? std::to_string(t.dims[n]) : "-");
            out << "\n";
        }
    }

    if (!r.checks.empty()) {
        std::size_t w = 5, lw = 8;
        for (const auto& c : r.checks) {
            w = std::max(w, c.check.size());
            lw = std::max(lw, c.location.size());
        }
        std::size_t pass = 0, fail = 0, skipped = 0;
        for (const auto& c : r.checks) (c.verdict == "pass" ? pass : c.verdict == "fail" ? fail : skipped)++;
        out << "\nchecks (" << pass << " pass, " << fail << " fail, " << skipped << " skipped)\n";
        for (const auto& c : r.checks) {
            std::string row = "  " + pad(c.verdict, 7) + "  " + pad(c.check, w) + "  " + pad(c.location, lw);
            if (!c.detail.empty()) row += "  " + c.detail;
            row.erase(row.find_last_not_of(' ') + 1);
            out << row << "\n";
        }
    }

    if (!r.nodes.empty()) {
        out << "\nexactness\n  " << pad("sequence", 8) << "  " << pad("node", 8) << "  " << pad("in", 6) << "  "
            << pad("out", 6) << "   dim  image  kernel  composite  verdict\n";
        for (const auto& s : r.nodes) {
            const auto& n = s.node;
            out << "  " << pad(s.sequence, 8) << "  " << pad(n.node, 8) << "  " << pad(n.incoming, 6) << "  "
                << pad(n.outgoing, 6) << "  " << std::setw(4) << n.dim << "  " << std::setw(5) << n.image_dim << "  "
                << std::setw(6) << n.kernel_dim << "  " << pad(n.composite_zero ? "zero" : "NONZERO", 9) << "  "
                << node_verdict(n) << "\n";
        }
    }

    if (!r.notes.empty()) {
        out << "\nnotes\n";
        for (const auto& n : r.notes) out << "  " << n << "\n";
    }
    if (!r.timings.empty()) {
        out << "\ntimings\n";
        for (const auto& [name, s] : r.timings)
            out << "  " << pad(name, 20) << "  " << std::fixed << std::setprecision(3) << s << " s\n";
    }
    out << "\nverdict: " << (r.passed() ? "pass" : "fail") << "\n";
    return out.str();
}

std::string emit_machine(const Report& r) {
    std::ostringstream out;
    auto line = [&](const json& j) { out << j.dump() << "\n"; };
    line({{"kind", "header"}, {"job", r.job}, {"command", r.command}, {"max_degree", r.max_degree}});
    for (const auto& t : r.tables)
        for (std::size_t n = 0; n < t.dims.size(); ++n)
            line({{"kind", "dim"}, {"theory", t.theory}, {"degree", n}, {"dim", t.dims[n]}});
    for (const auto& c : r.checks)
        line({{"kind", "check"}, {"check", c.check}, {"location", c.location}, {"verdict", c.verdict},
              {"detail", c.detail}});
    for (const auto& s : r.nodes) {
        const auto& n = s.node;
        line({{"kind", "node"}, {"sequence", s.sequence}, {"check", n.node}, {"theory", n.theory},
              {"degree", n.degree}, {"incoming", n.incoming}, {"outgoing", n.outgoing}, {"dim", n.dim},
              {"image", n.image_dim}, {"kernel", n.kernel_dim}, {"composite_zero", n.composite_zero},
              {"verdict", node_verdict(n)}});
    }
    for (const auto& n : r.notes) line({{"kind", "note"}, {"text", n}});
    line({{"kind", "summary"}, {"verdict", r.passed() ? "pass" : "fail"}});
    return out.str();
}

Report parse_machine(const std::string& text) {
    Report r;
    std::istringstream in(text);
    std::string s;
    std::size_t lineno = 0;
    while (std::getline(in, s)) {
        ++lineno;
        if (s.empty()) continue;
        json j;
        try {
            j = json::parse(s);
            const std::string kind = j.at("kind").get<std::string>();
            if (kind == "header") {
                r.job = j.at("job").get<std::string>();
                r.command = j.at("command").get<std::string>();
                r.max_degree = j.at("max_degree").get<std::size_t>();
            } else if (kind == "dim") {
                std::string theory = j.at("theory").get<std::string>();
                std::size_t degree = j.at("degree").get<std::size_t>();
                if (r.tables.empty() || r.tables.back().theory != theory) r.tables.push_back({theory, {}});
                auto& dims = r.tables.back().dims;
                if (degree != dims.size()) throw ParseError("degrees out of order");
                dims.push_back(j.at("dim").get<std::size_t>());
            } else if (kind == "check") {
                r.checks.push_back({j.at("check").get<std::string>(), j.at("location").get<std::string>(),
                                    j.at("verdict").get<std::string>(), j.at("detail").get<std::string>()});
            } else if (kind == "node") {
                SequenceNode sn;
                sn.sequence = j.at("sequence").get<std::string>();
                sn.node.node = j.at("check").get<std::string>();
                sn.node.theory = j.at("theory").get<std::string>();
                sn.node.degree = j.at("degree").get<std::size_t>();
                sn.node.incoming = j.at("incoming").get<std::string>();
                sn.node.outgoing = j.at("outgoing").get<std::string>();
                sn.node.dim = j.at("dim").get<std::size_t>();
                sn.node.image_dim = j.at("image").get<std::size_t>();
                sn.node.kernel_dim = j.at("kernel").get<std::size_t>();
                sn.node.composite_zero = j.at("composite_zero").get<bool>();
                sn.node.exact = j.at("verdict").get<std::string>() == "exact";
                r.nodes.push_back(std::move(sn));
            } else if (kind == "note") {
                r.notes.push_back(j.at("text").get<std::string>());
            } else if (kind != "summary") {
                throw ParseError("unknown kind '" + kind + "'");
            }
        } catch (const json::exception& e) {
            throw ParseError("machine report line " + std::to_string(lineno) + ": " + e.what());
        } catch (const ParseError& e) {
            throw ParseError("machine report line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return r;
}

} // namespace thl
