#include "bfi/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace bfi {

namespace {

using json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::parse_error, "cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(errc::parse_error, "cannot open '" + path + "' for writing");
    out << text;
}

json parse_json(const std::string& text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(errc::parse_error, origin + ": " + e.what());
    }
}

Mask parse_index_list(const json& arr, int n, const std::string& origin) {
    if (!arr.is_array())
        fail(errc::parse_error, origin + ": criterion list must be an array");
    std::vector<int> indices;
    int prev = 0;
    for (const auto& item : arr) {
        if (!item.is_number_integer())
            fail(errc::parse_error, origin + ": criterion indices must be integers");
        int i = item.get<int>();
        if (i <= prev)
            fail(errc::parse_error,
                 origin + ": criterion indices must be sorted and distinct");
        prev = i;
        indices.push_back(i);
    }
    return mask_from_indices(indices, n);
}

struct RawCarrier {
    int n;
    bool has_neg; // any entry carries a `neg` field
    std::vector<std::pair<SignedCoalition, double>> entries;
};

RawCarrier parse_carrier(const std::string& text, const std::string& origin) {
    json doc = parse_json(text, origin);
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("entries"))
        fail(errc::parse_error, origin + ": expected top-level fields 'n' and 'entries'");
    if (!doc["n"].is_number_integer())
        fail(errc::parse_error, origin + ": 'n' must be an integer");
    RawCarrier raw{doc["n"].get<int>(), false, {}};
    if (raw.n < 1 || raw.n > kMaxCriteria)
        fail(errc::parse_error, origin + ": 'n' must be in 1.." + std::to_string(kMaxCriteria));
    if (!doc["entries"].is_array())
        fail(errc::parse_error, origin + ": 'entries' must be an array");
    std::size_t line = 0;
    for (const auto& e : doc["entries"]) {
        ++line;
        std::string at = origin + ": entry " + std::to_string(line);
        if (!e.is_object() || !e.contains("pos") || !e.contains("value"))
            fail(errc::parse_error, at + " must have 'pos' and 'value'");
        SignedCoalition p;
        p.pos = parse_index_list(e["pos"], raw.n, at);
        if (e.contains("neg")) {
            raw.has_neg = true;
            p.neg = parse_index_list(e["neg"], raw.n, at);
            if (!p.disjoint())
                fail(errc::disjointness_violation,
                     at + ": 'pos' and 'neg' must be disjoint");
        }
        if (!e["value"].is_number())
            fail(errc::parse_error, at + ": 'value' must be a number");
        raw.entries.emplace_back(p, e["value"].get<double>());
    }
    return raw;
}

bool has_entry(const RawCarrier& raw, const SignedCoalition& p) {
    return std::any_of(raw.entries.begin(), raw.entries.end(),
                       [&](const auto& e) { return e.first == p; });
}

} // namespace

Capacity parse_capacity(const std::string& text, const std::string& origin) {
    RawCarrier raw = parse_carrier(text, origin);
    if (raw.has_neg)
        fail(errc::parse_error,
             origin + ": capacity entries must not carry a 'neg' field");
    std::vector<std::pair<Mask, double>> entries;
    for (const auto& [p, v] : raw.entries) entries.emplace_back(p.pos, v);
    if (!has_entry(raw, {0, 0})) entries.emplace_back(0, 0.0);
    if (!has_entry(raw, {full_mask(raw.n), 0})) entries.emplace_back(full_mask(raw.n), 1.0);
    return Capacity::validate(raw.n, entries);
}

BiCapacity parse_bicapacity(const std::string& text, const std::string& origin) {
    RawCarrier raw = parse_carrier(text, origin);
    Mask all = full_mask(raw.n);
    if (!has_entry(raw, {0, 0})) raw.entries.push_back({{0, 0}, 0.0});
    if (!has_entry(raw, {all, 0})) raw.entries.push_back({{all, 0}, 1.0});
    if (!has_entry(raw, {0, all})) raw.entries.push_back({{0, all}, -1.0});
    return BiCapacity::validate(raw.n, raw.entries);
}

Capacity load_capacity(const std::string& path) {
    return parse_capacity(read_file(path), path);
}

BiCapacity load_bicapacity(const std::string& path) {
    return parse_bicapacity(read_file(path), path);
}

namespace {

json index_array(Mask m) {
    json arr = json::array();
    for (int i : indices_from_mask(m)) arr.push_back(i);
    return arr;
}

std::string dump_carrier(int n, std::vector<std::pair<SignedCoalition, double>> entries,
                         bool with_neg) {
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
        int wa = popcount(a.first.pos) + popcount(a.first.neg);
        int wb = popcount(b.first.pos) + popcount(b.first.neg);
        if (wa != wb) return wa < wb;
        if (a.first.pos != b.first.pos) return a.first.pos < b.first.pos;
        return a.first.neg < b.first.neg;
    });
    json doc;
    doc["n"] = n;
    doc["entries"] = json::array();
    for (const auto& [p, v] : entries) {
        json e;
        e["pos"] = index_array(p.pos);
        if (with_neg) e["neg"] = index_array(p.neg);
        e["value"] = v;
        doc["entries"].push_back(std::move(e));
    }
    return doc.dump(2) + "\n";
}

} // namespace

std::string serialize_capacity(const Capacity& mu) {
    std::vector<std::pair<SignedCoalition, double>> entries;
    for (Mask m = 1; m < full_mask(mu.n()); ++m)
        entries.push_back({{m, 0}, mu.at(m)});
    return dump_carrier(mu.n(), std::move(entries), false);
}

std::string serialize_bicapacity(const BiCapacity& mb) {
    Mask all = full_mask(mb.n());
    std::vector<std::pair<SignedCoalition, double>> entries;
    for (std::size_t idx = 0; idx < pair_count(mb.n()); ++idx) {
        SignedCoalition p = pair_decode(mb.n(), idx);
        bool boundary = (p.pos == 0 && p.neg == 0) || (p.pos == all && p.neg == 0) ||
                        (p.pos == 0 && p.neg == all);
        if (boundary) continue;
        entries.push_back({p, mb.at(p)});
    }
    return dump_carrier(mb.n(), std::move(entries), true);
}

void save_capacity(const Capacity& mu, const std::string& path) {
    write_file(path, serialize_capacity(mu));
}

void save_bicapacity(const BiCapacity& mb, const std::string& path) {
    write_file(path, serialize_bicapacity(mb));
}

std::string carrier_fingerprint(const std::string& canonical) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : canonical) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

AlternativesTable parse_alternatives(const std::string& text, const Interval& scale,
                                     const std::string& origin) {
    AlternativesTable table;
    std::istringstream in(text);
    std::string line;
    long lineno = 0;
    std::size_t columns = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::size_t start = 0;
        for (;;) {
            std::size_t comma = line.find(',', start);
            fields.push_back(line.substr(start, comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (lineno == 1) {
            if (fields.size() < 2 || fields[0] != "id")
                fail(errc::parse_error,
                     origin + ": header must be 'id,c1,...,cn'");
            columns = fields.size();
            continue;
        }
        if (fields.size() != columns)
            fail(errc::ragged_row, origin + ": line " + std::to_string(lineno) +
                                       " has " + std::to_string(fields.size()) +
                                       " fields, header has " + std::to_string(columns));
        const std::string& id = fields[0];
        if (id.empty())
            fail(errc::parse_error,
                 origin + ": line " + std::to_string(lineno) + " has an empty id");
        if (std::find(table.ids.begin(), table.ids.end(), id) != table.ids.end())
            fail(errc::duplicate_id,
                 origin + ": duplicate id '" + id + "' on line " + std::to_string(lineno));
        std::vector<double> scores;
        for (std::size_t i = 1; i < fields.size(); ++i) {
            try {
                std::size_t used = 0;
                double v = std::stod(fields[i], &used);
                if (used != fields[i].size()) throw std::invalid_argument(fields[i]);
                scores.push_back(v);
            } catch (const std::exception&) {
                fail(errc::parse_error, origin + ": line " + std::to_string(lineno) +
                                            ": '" + fields[i] + "' is not a number");
            }
        }
        table.ids.push_back(id);
        table.rows.emplace_back(std::move(scores), scale);
    }
    return table;
}

AlternativesTable load_alternatives(const std::string& path, const Interval& scale) {
    return parse_alternatives(read_file(path), scale, path);
}

std::vector<double> score_batch_serial(const Aggregator& G, const AlternativesTable& table) {
    std::vector<double> out(table.rows.size());
    for (std::size_t i = 0; i < table.rows.size(); ++i) out[i] = G.eval(table.rows[i]);
    return out;
}

std::vector<double> score_batch_parallel(const Aggregator& G, const AlternativesTable& table) {
    std::vector<double> out(table.rows.size());
    std::exception_ptr error;
    long rows = static_cast<long>(table.rows.size());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < rows; ++i) {
        try {
            out[i] = G.eval(table.rows[i]);
        } catch (...) {
#pragma omp critical(bfi_batch_error)
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    return out;
}

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::vector<RankedRow> rank_rows(const AlternativesTable& table,
                                 const std::vector<double>& values) {
    std::vector<std::size_t> order(values.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return values[a] > values[b];
    });
    std::vector<RankedRow> out;
    out.reserve(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
        int rank = (k > 0 && values[order[k]] == values[order[k - 1]])
                       ? out.back().rank
                       : static_cast<int>(k) + 1;
        out.push_back({rank, table.ids[order[k]], values[order[k]]});
    }
    return out;
}

} // namespace bfi
