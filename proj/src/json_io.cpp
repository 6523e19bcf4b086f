#include "symmid/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "symmid/errors.hpp"

namespace symmid {

json to_json(const Partition& x) {
    return json(x.parts());
}

Partition partition_from_json(const json& j) {
    if (!j.is_array()) throw DomainError("partition must be a JSON array of integers");
    std::vector<int> parts;
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw DomainError("partition entries must be integers");
        parts.push_back(e.get<int>());
    }
    return Partition(std::move(parts));
}

json to_json(const Ideal& x) {
    json gens = json::array();
    for (const Partition& g : x.generators()) gens.push_back(to_json(g));
    return json{{"n", x.n()}, {"generators", gens}};
}

Ideal ideal_from_json(const json& j, bool* warned) {
    if (!j.is_object() || !j.contains("n") || !j.contains("generators"))
        throw DomainError("ideal JSON must be an object with \"n\" and \"generators\"");
    if (!j["n"].is_number_integer()) throw DomainError("\"n\" must be an integer");
    std::vector<Partition> gens;
    for (const auto& g : j["generators"]) gens.push_back(partition_from_json(g));
    Ideal out(j["n"].get<int>(), std::move(gens));
    if (warned) *warned = !out.input_was_antichain();
    return out;
}

namespace {

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw DomainError(std::string("invalid JSON in ") + path + ": " + e.what());
    }
    return j;
}

} // namespace

Ideal load_ideal_file(const std::string& path, bool* warned) {
    return ideal_from_json(parse_file(path), warned);
}

std::vector<Partition> partition_set_from_json(const json& j) {
    const json* arr = nullptr;
    if (j.is_array())
        arr = &j;
    else if (j.is_object() && j.contains("generators"))
        arr = &j["generators"];
    else
        throw DomainError("partition set JSON must be an array or carry \"generators\"");
    std::vector<Partition> out;
    for (const auto& g : *arr) out.push_back(partition_from_json(g));
    return out;
}

std::vector<Partition> load_partition_set_file(const std::string& path) {
    return partition_set_from_json(parse_file(path));
}

json to_json(const ZPair& pair) {
    return json{{"z", to_json(pair.z)}, {"l", pair.l}};
}

json z_set_to_json(const std::vector<ZPair>& pairs, int n) {
    json out = json::array();
    for (const ZPair& p : pairs) {
        json row = to_json(p);
        row["reg_term"] = p.z.sum() + p.l + 1;
        row["pdim_term"] = n - 1 - p.l;
        out.push_back(std::move(row));
    }
    return out;
}

json to_json(const MultigradedCharacter& chi) {
    json terms = json::array();
    for (const auto& [deg, mult] : chi.terms())
        terms.push_back(json{{"deg", deg}, {"mult", mult}});
    return json{{"n", chi.n()}, {"lo", chi.lo()}, {"hi", chi.hi()}, {"terms", terms}};
}

json to_json(const InvariantReport& report) {
    json witnesses = json::array();
    auto record = [&](const ZPair& p, const char* kind) {
        for (auto& w : witnesses)
            if (w["z"] == to_json(p.z) && w["l"] == p.l) {
                w["attains"].push_back(kind);
                return;
            }
        json row = to_json(p);
        row["attains"] = json::array({kind});
        witnesses.push_back(std::move(row));
    };
    for (const ZPair& p : report.reg_witnesses) record(p, "reg");
    for (const ZPair& p : report.pdim_witnesses) record(p, "pdim");
    return json{{"reg", report.reg},
                {"pdim", report.pdim},
                {"depth", report.depth},
                {"witnesses", witnesses}};
}

json to_json(const CohenMacaulayReport& report) {
    return json{{"cohen_macaulay", report.cohen_macaulay},
                {"unmixed", report.unmixed},
                {"dim", report.dim},
                {"conditions",
                 json{{"equal_first_parts", report.equal_first_parts},
                      {"uniform_level", report.uniform_level}}},
                {"levels", report.levels}};
}

json to_json(const BettiTable& table) {
    json entries = json::array();
    for (const auto& [key, value] : table.entries)
        entries.push_back(json{{"i", key.first}, {"j", key.second}, {"value", value}});
    return json{{"field", table.field_char},
                {"reg", table.reg()},
                {"pdim", table.pdim()},
                {"entries", entries}};
}

std::string render_betti_table(const BettiTable& table) {
    int min_row = 0, max_row = 0, max_col = 0;
    bool first = true;
    for (const auto& [key, value] : table.entries) {
        if (value <= 0) continue;
        if (first) {
            min_row = max_row = key.second;
            first = false;
        }
        min_row = std::min(min_row, key.second);
        max_row = std::max(max_row, key.second);
        max_col = std::max(max_col, key.first);
    }
    std::vector<std::size_t> width(static_cast<std::size_t>(max_col) + 1, 1);
    for (int i = 0; i <= max_col; ++i)
        for (int j = min_row; j <= max_row; ++j) {
            long long v = table.entry(i, j);
            std::size_t len = v > 0 ? std::to_string(v).size() : 1;
            width[static_cast<std::size_t>(i)] = std::max(width[static_cast<std::size_t>(i)], len);
        }
    std::ostringstream out;
    std::size_t label = std::to_string(max_row).size();
    out << std::string(label + 2, ' ');
    for (int i = 0; i <= max_col; ++i) {
        std::string s = std::to_string(i);
        out << std::string(width[static_cast<std::size_t>(i)] + 1 - s.size(), ' ') << s;
    }
    out << '\n';
    for (int j = min_row; j <= max_row; ++j) {
        std::string s = std::to_string(j);
        out << std::string(label - s.size(), ' ') << s << ": ";
        for (int i = 0; i <= max_col; ++i) {
            long long v = table.entry(i, j);
            std::string cell = v > 0 ? std::to_string(v) : "-";
            out << std::string(width[static_cast<std::size_t>(i)] + 1 - cell.size(), ' ') << cell;
        }
        out << '\n';
    }
    return out.str();
}

} // namespace symmid
