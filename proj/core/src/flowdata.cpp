#include "ddosml/flowdata.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

#include "ddosml/error.hpp"
#include "ddosml/random.hpp"

namespace ddosml {
namespace {

constexpr double missing = std::numeric_limits<double>::quiet_NaN();

bool iequals(std::string_view a, std::string_view b) {
    return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
               auto lower = [](char c) { return (c >= 'A' && c <= 'Z') ? char(c - 'A' + 'a') : c; };
               return lower(x) == lower(y);
           });
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        auto comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(trim(line.substr(start)));
            break;
        }
        fields.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
    return fields;
}

// NaN marks a field that is empty or not a complete decimal number.
double parse_number(std::string_view s) {
    if (s.empty()) {
        return missing;
    }
    if (s.front() == '+') {
        s.remove_prefix(1);
    }
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        return missing;
    }
    return v;
}

void append_number(std::string& out, double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, ptr);
}

} // namespace

Protocol protocol_from_string(std::string_view name) noexcept {
    if (iequals(name, "TCP")) return Protocol::tcp;
    if (iequals(name, "UDP")) return Protocol::udp;
    if (iequals(name, "ICMP")) return Protocol::icmp;
    return Protocol::other;
}

std::string_view to_string(Protocol p) noexcept {
    switch (p) {
    case Protocol::tcp: return "TCP";
    case Protocol::udp: return "UDP";
    case Protocol::icmp: return "ICMP";
    case Protocol::other: return "OTHER";
    }
    return "OTHER";
}

std::string_view to_string(FlowLabel l) noexcept {
    return l == FlowLabel::ddos ? "ddos" : "benign";
}

const std::vector<std::string>& flow_feature_names() {
    static const std::vector<std::string> names = {
        "pkt_size_mean", "pkt_rate",  "duration",   "proto_TCP",
        "proto_UDP",     "proto_ICMP", "proto_OTHER"};
    return names;
}

Dataset parse_flow_csv(std::string_view text, std::string source_name) {
    if (text.starts_with("\xEF\xBB\xBF")) {
        text.remove_prefix(3);
    }
    Dataset ds;
    ds.source_name = std::move(source_name);

    std::size_t line_no = 0;
    bool seen_header = false;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto nl = text.find('\n', pos);
        auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() : nl + 1;
        ++line_no;
        if (line.ends_with('\r')) {
            line.remove_suffix(1);
        }

        if (!seen_header) {
            if (line != flow_csv_header) {
                throw ParseError(line_no, "expected header '" + std::string(flow_csv_header) + "'");
            }
            seen_header = true;
            continue;
        }
        if (trim(line).empty()) {
            continue;
        }

        auto fields = split_fields(line);
        if (fields.size() != 5) {
            throw ParseError(line_no, "expected 5 columns, found " + std::to_string(fields.size()));
        }
        FlowRecord rec;
        rec.pkt_size_mean = parse_number(fields[0]);
        rec.pkt_rate = parse_number(fields[1]);
        rec.duration = parse_number(fields[2]);
        rec.protocol = protocol_from_string(fields[3]);
        if (iequals(fields[4], "benign")) {
            rec.label = FlowLabel::benign;
        } else if (iequals(fields[4], "ddos")) {
            rec.label = FlowLabel::ddos;
        } else {
            throw ParseError(line_no, "unknown label '" + std::string(fields[4]) + "'");
        }
        ds.records.push_back(rec);
    }
    if (!seen_header) {
        throw ParseError(1, "missing header");
    }
    return ds;
}

std::string write_flow_csv(const Dataset& ds) {
    std::string out(flow_csv_header);
    out += '\n';
    for (const auto& r : ds.records) {
        append_number(out, r.pkt_size_mean);
        out += ',';
        append_number(out, r.pkt_rate);
        out += ',';
        append_number(out, r.duration);
        out += ',';
        out += to_string(r.protocol);
        out += ',';
        out += to_string(r.label);
        out += '\n';
    }
    return out;
}

std::pair<Dataset, CleanStats> clean(const Dataset& ds) {
    CleanStats stats;
    stats.rows_in = ds.records.size();
    Dataset out;
    out.source_name = ds.source_name;
    out.records.reserve(ds.records.size());
    for (const auto& r : ds.records) {
        const double numeric[] = {r.pkt_size_mean, r.pkt_rate, r.duration};
        if (std::any_of(std::begin(numeric), std::end(numeric), [](double v) { return !std::isfinite(v); })) {
            ++stats.rows_dropped_missing;
        } else if (std::any_of(std::begin(numeric), std::end(numeric), [](double v) { return v < 0.0; })) {
            ++stats.rows_dropped_range;
        } else {
            out.records.push_back(r);
        }
    }
    stats.rows_out = out.records.size();
    if (out.records.empty()) {
        throw EmptyDatasetError("no records left after cleaning (" + std::to_string(stats.rows_in) +
                                " in, " + std::to_string(stats.rows_dropped_missing) + " missing, " +
                                std::to_string(stats.rows_dropped_range) + " out of range)");
    }
    return {std::move(out), stats};
}

FeatureMatrix to_matrix(const Dataset& ds) {
    const auto& names = flow_feature_names();
    std::vector<double> values;
    values.reserve(ds.records.size() * names.size());
    Labels labels;
    labels.reserve(ds.records.size());
    for (const auto& r : ds.records) {
        values.push_back(r.pkt_size_mean);
        values.push_back(r.pkt_rate);
        values.push_back(r.duration);
        for (auto p : {Protocol::tcp, Protocol::udp, Protocol::icmp, Protocol::other}) {
            values.push_back(r.protocol == p ? 1.0 : 0.0);
        }
        labels.push_back(static_cast<int>(r.label));
    }
    return {ds.records.size(), names, std::move(values), std::move(labels)};
}

SplitIndices stratified_split_indices(std::span<const int> labels, double train_fraction,
                                      std::uint64_t seed) {
    if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
        throw ArgumentError("train fraction must lie in (0, 1)");
    }
    require_binary(labels);

    std::vector<std::size_t> by_class[2];
    for (std::size_t i = 0; i < labels.size(); ++i) {
        by_class[labels[i]].push_back(i);
    }
    Rng rng(seed);
    SplitIndices out;
    for (int c = 0; c < 2; ++c) {
        auto& idx = by_class[c];
        if (idx.size() < 2) {
            throw StratificationError("class " + std::to_string(c) + " has " +
                                      std::to_string(idx.size()) + " rows, need at least 2");
        }
        rng.shuffle(std::span<std::size_t>(idx));
        auto cut = static_cast<std::size_t>(std::llround(train_fraction * static_cast<double>(idx.size())));
        cut = std::clamp<std::size_t>(cut, 1, idx.size() - 1);
        out.train.insert(out.train.end(), idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(cut));
        out.test.insert(out.test.end(), idx.begin() + static_cast<std::ptrdiff_t>(cut), idx.end());
    }
    std::sort(out.train.begin(), out.train.end());
    std::sort(out.test.begin(), out.test.end());
    return out;
}

std::pair<FeatureMatrix, FeatureMatrix> stratified_split(const FeatureMatrix& m,
                                                         double train_fraction,
                                                         std::uint64_t seed) {
    auto idx = stratified_split_indices(m.labels(), train_fraction, seed);
    return {m.take_rows(idx.train), m.take_rows(idx.test)};
}

std::string write_matrix_csv(const FeatureMatrix& m) {
    std::string out;
    for (const auto& name : m.column_names()) {
        out += name;
        out += ',';
    }
    out += "label\n";
    const auto& labels = m.labels();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (double v : m.row(r)) {
            append_number(out, v);
            out += ',';
        }
        out += labels[r] ? '1' : '0';
        out += '\n';
    }
    return out;
}

} // namespace ddosml
