#include "mvfp/problem.hpp"

#include "mvfp/text.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

namespace mvfp {

namespace {

struct Line {
    int number = 0;
    std::string text;
};

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

bool parse_double(const std::string& s, double& out) {
    if (s.empty()) return false;
    char* end = nullptr;
    out = std::strtod(s.c_str(), &end);
    return end == s.c_str() + s.size() && std::isfinite(out);
}

bool parse_int(const std::string& s, int& out) {
    if (s.empty()) return false;
    char* end = nullptr;
    const long v = std::strtol(s.c_str(), &end, 10);
    if (end != s.c_str() + s.size()) return false;
    out = static_cast<int>(v);
    return static_cast<long>(out) == v;
}

bool parse_bool(const std::string& s, bool& out) {
    if (s == "true") { out = true; return true; }
    if (s == "false") { out = false; return true; }
    return false;
}

struct Section {
    int header_line = 0;
    std::vector<Line> lines;
};

class Issues {
public:
    void add(int line, std::string message) { items_.push_back({line, std::move(message)}); }
    bool empty() const { return items_.empty(); }
    std::vector<ParseIssue> take() { return std::move(items_); }

private:
    std::vector<ParseIssue> items_;
};

// key = value split; returns false when the line has no '='.
bool key_value(const std::string& text, std::string& key, std::string& value) {
    const auto eq = text.find('=');
    if (eq == std::string::npos) return false;
    key = trim(text.substr(0, eq));
    value = trim(text.substr(eq + 1));
    return !key.empty();
}

std::optional<MetricSpace> build_space(const Section& sec, Issues& issues) {
    std::map<std::string, std::pair<int, std::string>> keys;
    for (const Line& line : sec.lines) {
        std::string key, value;
        if (!key_value(line.text, key, value)) {
            issues.add(line.number, "expected key = value in [space]");
            continue;
        }
        if (keys.count(key)) {
            issues.add(line.number, "duplicate key '" + key + "' in [space]");
            continue;
        }
        keys[key] = {line.number, value};
    }

    auto mode_it = keys.find("mode");
    if (mode_it == keys.end()) {
        issues.add(sec.header_line, "[space] needs mode = finite-matrix | grid-1d");
        return std::nullopt;
    }
    const std::string mode = mode_it->second.second;
    auto reject_unknown = [&](std::initializer_list<const char*> allowed) {
        for (const auto& [key, lv] : keys) {
            if (std::find_if(allowed.begin(), allowed.end(),
                             [&](const char* a) { return key == a; }) == allowed.end())
                issues.add(lv.first, "unknown [space] key '" + key + "' for mode " + mode);
        }
    };

    if (mode == "grid-1d") {
        reject_unknown({"mode", "origin", "step", "count"});
        double origin = 0.0, step = 0.0;
        int count = 0;
        bool ok = true;
        for (const char* need : {"origin", "step", "count"}) {
            if (!keys.count(need)) {
                issues.add(sec.header_line, std::string("[space] grid-1d needs ") + need);
                ok = false;
            }
        }
        if (!ok) return std::nullopt;
        if (!parse_double(keys["origin"].second, origin))
            { issues.add(keys["origin"].first, "origin must be a finite number"); ok = false; }
        if (!parse_double(keys["step"].second, step) || step <= 0.0)
            { issues.add(keys["step"].first, "step must be a positive number"); ok = false; }
        if (!parse_int(keys["count"].second, count) || count < 1)
            { issues.add(keys["count"].first, "count must be a positive integer"); ok = false; }
        if (!ok) return std::nullopt;
        return MetricSpace::grid(origin, step, count);
    }

    if (mode != "finite-matrix") {
        issues.add(mode_it->second.first, "mode must be finite-matrix or grid-1d");
        return std::nullopt;
    }

    const bool has_coords = keys.count("coords") > 0;
    const bool has_matrix = keys.count("matrix") > 0;
    if (has_coords == has_matrix) {
        issues.add(sec.header_line,
                   "[space] finite-matrix needs exactly one of coords or matrix");
        return std::nullopt;
    }

    if (has_coords) {
        reject_unknown({"mode", "coords"});
        std::vector<double> coords;
        for (const std::string& tok : split_ws(keys["coords"].second)) {
            double v;
            if (!parse_double(tok, v)) {
                issues.add(keys["coords"].first, "coords entry '" + tok + "' is not a number");
                return std::nullopt;
            }
            coords.push_back(v);
        }
        if (coords.empty()) {
            issues.add(keys["coords"].first, "coords must list at least one value");
            return std::nullopt;
        }
        std::vector<double> sorted = coords;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            issues.add(keys["coords"].first, "coords must be distinct");
            return std::nullopt;
        }
        return MetricSpace::from_coordinates(std::move(coords));
    }

    reject_unknown({"mode", "matrix", "points"});
    std::vector<std::vector<double>> rows;
    {
        std::string row_text;
        std::istringstream in(keys["matrix"].second);
        while (std::getline(in, row_text, ';')) {
            std::vector<double> row;
            for (const std::string& tok : split_ws(row_text)) {
                double v;
                if (!parse_double(tok, v)) {
                    issues.add(keys["matrix"].first,
                               "matrix entry '" + tok + "' is not a number");
                    return std::nullopt;
                }
                row.push_back(v);
            }
            if (!row.empty()) rows.push_back(std::move(row));
        }
    }
    if (rows.empty()) {
        issues.add(keys["matrix"].first, "matrix must have at least one row");
        return std::nullopt;
    }
    const std::size_t n = rows.size();
    for (const auto& row : rows) {
        if (row.size() != n) {
            issues.add(keys["matrix"].first, "matrix must be square (" + std::to_string(n) +
                                                 " rows, a row has " +
                                                 std::to_string(row.size()) + " entries)");
            return std::nullopt;
        }
    }

    std::vector<double> labels;
    if (keys.count("points")) {
        for (const std::string& tok : split_ws(keys["points"].second)) {
            double v;
            if (!parse_double(tok, v)) {
                issues.add(keys["points"].first, "points entry '" + tok + "' is not a number");
                return std::nullopt;
            }
            labels.push_back(v);
        }
        if (labels.size() != n) {
            issues.add(keys["points"].first, "points must name every matrix row");
            return std::nullopt;
        }
        std::vector<double> sorted = labels;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            issues.add(keys["points"].first, "point labels must be distinct");
            return std::nullopt;
        }
        // Canonical order: ascending labels; permute the matrix to match.
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        std::sort(perm.begin(), perm.end(),
                  [&](std::size_t a, std::size_t b) { return labels[a] < labels[b]; });
        std::vector<std::vector<double>> permuted(n, std::vector<double>(n));
        std::vector<double> sorted_labels(n);
        for (std::size_t i = 0; i < n; ++i) {
            sorted_labels[i] = labels[perm[i]];
            for (std::size_t j = 0; j < n; ++j) permuted[i][j] = rows[perm[i]][perm[j]];
        }
        rows = std::move(permuted);
        labels = std::move(sorted_labels);
    }

    try {
        return MetricSpace::from_matrix(std::move(rows), std::move(labels));
    } catch (const std::invalid_argument& e) {
        issues.add(keys["matrix"].first, e.what());
        return std::nullopt;
    }
}

// Affine contraction of labels toward p with factor c, quantized toward p:
// the image is the universe label farthest from p among those lying
// between p and p + c*(label - p).
std::optional<Point> affine_image(const MetricSpace& space, Point x, double p, double c) {
    const double v = p + c * (space.label(x) - p);
    std::optional<Point> best;
    double best_dist = -1.0;
    for (Point w : space.points()) {
        const double off = space.label(w) - p;
        const double target = v - p;
        const bool same_side = (off >= 0.0 && target >= 0.0) || (off <= 0.0 && target <= 0.0);
        if (!same_side || std::fabs(off) > std::fabs(target)) continue;
        if (std::fabs(off) > best_dist) {
            best_dist = std::fabs(off);
            best = w;
        }
    }
    return best;
}

std::optional<MultiMap> build_map(const Section& sec, const MetricSpace& space,
                                  const char* map_name, const MultiMap* other,
                                  Issues& issues) {
    const int n = space.size();
    std::vector<std::optional<PointSet>> images(static_cast<std::size_t>(n));
    bool family_seen = false;
    bool entry_seen = false;

    auto family_map = [&](const std::vector<std::string>& tokens, int line) -> bool {
        const std::string& name = tokens.front();
        if (name == "identity") {
            if (tokens.size() != 1) { issues.add(line, "identity takes no parameters"); return false; }
            for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] =
                PointSet({Point{i}});
            return true;
        }
        if (name == "shift") {
            int k = 0;
            if (tokens.size() != 2 || !parse_int(tokens[1], k)) {
                issues.add(line, "shift needs one integer parameter");
                return false;
            }
            for (int i = 0; i < n; ++i) {
                const int j = ((i + k) % n + n) % n;
                images[static_cast<std::size_t>(i)] = PointSet({Point{j}});
            }
            return true;
        }
        double p = 0.0, c = 0.5;
        if (name == "halving") {
            if (tokens.size() != 1) { issues.add(line, "halving takes no parameters"); return false; }
        } else if (name == "affine") {
            if (tokens.size() != 3 || !parse_double(tokens[1], p) || !parse_double(tokens[2], c) ||
                c < 0.0) {
                issues.add(line, "affine needs parameters: target label and factor >= 0");
                return false;
            }
        } else {
            issues.add(line, "unknown family '" + name + "'");
            return false;
        }
        if (!space.point_with_label(p)) {
            issues.add(line, "family target " + format_number(p) + " is not a point of the space");
            return false;
        }
        for (int i = 0; i < n; ++i) {
            const auto img = affine_image(space, Point{i}, p, c);
            if (!img) {
                issues.add(line, "family image of " + format_number(space.label(Point{i})) +
                                     " leaves the universe");
                return false;
            }
            images[static_cast<std::size_t>(i)] = PointSet({*img});
        }
        return true;
    };

    for (const Line& line : sec.lines) {
        const auto arrow = line.text.find("->");
        if (arrow != std::string::npos) {
            entry_seen = true;
            double from;
            if (!parse_double(trim(line.text.substr(0, arrow)), from)) {
                issues.add(line.number, "map entry needs a numeric source label");
                continue;
            }
            const auto from_point = space.point_with_label(from);
            if (!from_point) {
                issues.add(line.number, "label " + format_number(from) +
                                            " is not a point of the space");
                continue;
            }
            std::vector<Point> members;
            bool ok = true;
            const auto tokens = split_ws(line.text.substr(arrow + 2));
            for (const std::string& tok : tokens) {
                double v;
                if (!parse_double(tok, v)) {
                    issues.add(line.number, "image entry '" + tok + "' is not a number");
                    ok = false;
                    break;
                }
                const auto pt = space.point_with_label(v);
                if (!pt) {
                    issues.add(line.number, "image label " + format_number(v) +
                                                " is not a point of the space");
                    ok = false;
                    break;
                }
                members.push_back(*pt);
            }
            if (!ok) continue;
            if (members.empty()) {
                issues.add(line.number, "image must list at least one label");
                continue;
            }
            auto& slot = images[static_cast<std::size_t>(from_point->index)];
            if (slot) {
                issues.add(line.number, "duplicate image for label " + format_number(from));
                continue;
            }
            slot = PointSet(std::move(members));
            continue;
        }

        std::string key, value;
        if (!key_value(line.text, key, value)) {
            issues.add(line.number, std::string("expected key = value or label -> labels in [") +
                                        map_name + "]");
            continue;
        }
        if (key == "same") {
            if (value != "S" || other == nullptr) {
                issues.add(line.number, "same = S is only valid inside [map T]");
                continue;
            }
            if (sec.lines.size() != 1) {
                issues.add(line.number, "same = S must be the section's only line");
                return std::nullopt;
            }
            return *other;
        }
        if (key != "family") {
            issues.add(line.number, std::string("unknown [") + map_name + "] key '" + key + "'");
            continue;
        }
        if (family_seen) {
            issues.add(line.number, "map declares more than one family");
            continue;
        }
        family_seen = true;
        const auto tokens = split_ws(value);
        if (tokens.empty()) {
            issues.add(line.number, "family needs a name");
            continue;
        }
        if (!family_map(tokens, line.number)) return std::nullopt;
    }

    if (family_seen && entry_seen) {
        issues.add(sec.header_line,
                   std::string("[") + map_name + "] mixes a family with explicit entries");
        return std::nullopt;
    }
    std::vector<PointSet> final_images;
    final_images.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        auto& slot = images[static_cast<std::size_t>(i)];
        if (!slot) {
            issues.add(sec.header_line, std::string("[") + map_name + "] leaves label " +
                                            format_number(space.label(Point{i})) + " unmapped");
            return std::nullopt;
        }
        final_images.push_back(std::move(*slot));
    }
    if (!issues.empty()) return std::nullopt;
    return MultiMap(n, std::move(final_images));
}

std::optional<ContractionDesc> build_contraction(const Section& sec, Issues& issues) {
    std::map<std::string, std::pair<int, std::string>> keys;
    for (const Line& line : sec.lines) {
        std::string key, value;
        if (!key_value(line.text, key, value)) {
            issues.add(line.number, "expected key = value in [contraction]");
            continue;
        }
        if (keys.count(key)) {
            issues.add(line.number, "duplicate key '" + key + "' in [contraction]");
            continue;
        }
        keys[key] = {line.number, value};
    }

    auto kind_it = keys.find("kind");
    if (kind_it == keys.end()) {
        issues.add(sec.header_line, "[contraction] needs kind = alpha-const | alpha-from-gap | "
                                    "phi-linear | phi-rational");
        return std::nullopt;
    }

    ContractionDesc desc;
    const std::string kind = kind_it->second.second;
    auto take_flag = [&](const char* name, bool& flag) {
        auto it = keys.find(name);
        if (it == keys.end()) return true;
        if (!parse_bool(it->second.second, flag)) {
            issues.add(it->second.first, std::string(name) + " must be true or false");
            return false;
        }
        return true;
    };
    if (!take_flag("alpha_usc", desc.alpha_usc) || !take_flag("phi_usc", desc.phi_usc))
        return std::nullopt;

    auto reject_unknown = [&](std::initializer_list<const char*> allowed) {
        bool ok = true;
        for (const auto& [key, lv] : keys) {
            if (key == "alpha_usc" || key == "phi_usc" || key == "kind") continue;
            if (std::find_if(allowed.begin(), allowed.end(),
                             [&](const char* a) { return key == a; }) == allowed.end()) {
                issues.add(lv.first, "unknown [contraction] key '" + key + "' for kind " + kind);
                ok = false;
            }
        }
        return ok;
    };

    if (kind == "alpha-const") {
        desc.kind = ContractionKindId::AlphaConst;
        if (!reject_unknown({"alpha"})) return std::nullopt;
        auto it = keys.find("alpha");
        if (it == keys.end()) {
            issues.add(sec.header_line, "alpha-const needs alpha = <number>");
            return std::nullopt;
        }
        // Range deliberately unchecked here: the certificate layer owns it.
        if (!parse_double(it->second.second, desc.alpha)) {
            issues.add(it->second.first, "alpha must be a finite number");
            return std::nullopt;
        }
        return desc;
    }
    if (kind == "alpha-from-gap") {
        desc.kind = ContractionKindId::AlphaFromGap;
        if (!reject_unknown({"gap"})) return std::nullopt;
        auto it = keys.find("gap");
        if (it == keys.end()) {
            issues.add(sec.header_line,
                       "alpha-from-gap needs gap = half-distance | scaled-distance C | constant C");
            return std::nullopt;
        }
        const auto tokens = split_ws(it->second.second);
        if (tokens.empty()) {
            issues.add(it->second.first, "gap needs a family name");
            return std::nullopt;
        }
        if (tokens[0] == "half-distance") {
            if (tokens.size() != 1) {
                issues.add(it->second.first, "half-distance takes no parameters");
                return std::nullopt;
            }
            desc.gap_family = GapFamilyId::HalfDistance;
            return desc;
        }
        if (tokens[0] == "scaled-distance" || tokens[0] == "constant") {
            double c;
            if (tokens.size() != 2 || !parse_double(tokens[1], c)) {
                issues.add(it->second.first, tokens[0] + " needs one numeric parameter");
                return std::nullopt;
            }
            desc.gap_family = tokens[0] == "constant" ? GapFamilyId::Constant
                                                      : GapFamilyId::ScaledDistance;
            desc.gap_param = c;
            return desc;
        }
        issues.add(it->second.first, "unknown gap family '" + tokens[0] + "'");
        return std::nullopt;
    }
    if (kind == "phi-linear") {
        desc.kind = ContractionKindId::PhiLinear;
        if (!reject_unknown({"c"})) return std::nullopt;
        auto it = keys.find("c");
        if (it == keys.end()) {
            issues.add(sec.header_line, "phi-linear needs c = <number>");
            return std::nullopt;
        }
        if (!parse_double(it->second.second, desc.phi_c)) {
            issues.add(it->second.first, "c must be a finite number");
            return std::nullopt;
        }
        return desc;
    }
    if (kind == "phi-rational") {
        desc.kind = ContractionKindId::PhiRational;
        if (!reject_unknown({})) return std::nullopt;
        return desc;
    }
    issues.add(kind_it->second.first, "unknown contraction kind '" + kind + "'");
    return std::nullopt;
}

} // namespace

ParseResult parse_problem(const std::string& text) {
    Issues issues;
    std::map<std::string, Section> sections;
    std::vector<std::string> order;

    std::string current;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    bool any_content = false;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;
        any_content = true;
        if (line.front() == '[') {
            if (line.back() != ']') {
                issues.add(line_no, "unterminated section header");
                continue;
            }
            current = trim(line.substr(1, line.size() - 2));
            if (current != "space" && current != "map S" && current != "map T" &&
                current != "contraction") {
                issues.add(line_no, "unknown section [" + current + "]");
                current.clear();
                continue;
            }
            if (sections.count(current)) {
                issues.add(line_no, "duplicate section [" + current + "]");
                current.clear();
                continue;
            }
            sections[current].header_line = line_no;
            order.push_back(current);
            continue;
        }
        if (current.empty()) {
            issues.add(line_no, "content before any section header");
            continue;
        }
        sections[current].lines.push_back({line_no, line});
    }

    if (!any_content) {
        issues.add(0, "empty problem file");
        return {std::nullopt, issues.take()};
    }
    for (const char* need : {"space", "map S", "map T", "contraction"}) {
        if (!sections.count(need)) issues.add(0, std::string("missing section [") + need + "]");
    }
    if (!issues.empty()) return {std::nullopt, issues.take()};

    auto space = build_space(sections["space"], issues);
    if (!space) return {std::nullopt, issues.take()};

    auto s = build_map(sections["map S"], *space, "map S", nullptr, issues);
    if (!s) return {std::nullopt, issues.take()};
    auto t = build_map(sections["map T"], *space, "map T", &*s, issues);
    if (!t) return {std::nullopt, issues.take()};

    auto desc = build_contraction(sections["contraction"], issues);
    if (!desc) return {std::nullopt, issues.take()};

    if (desc->kind == ContractionKindId::AlphaFromGap && !(*s == *t)) {
        issues.add(sections["contraction"].header_line,
                   "alpha-from-gap certifies a single map: [map S] and [map T] must coincide");
        return {std::nullopt, issues.take()};
    }
    if (!issues.empty()) return {std::nullopt, issues.take()};

    return {ProblemFile{std::move(*space), std::move(*s), std::move(*t), *desc}, {}};
}

std::string render_problem(const ProblemFile& problem) {
    std::ostringstream out;
    const MetricSpace& space = problem.space;

    out << "[space]\n";
    if (space.mode() == SpaceMode::Grid1d) {
        const GridSpec& g = *space.grid_spec();
        out << "mode = grid-1d\n";
        out << "origin = " << format_number(g.origin) << "\n";
        out << "step = " << format_number(g.step) << "\n";
        out << "count = " << g.count << "\n";
    } else if (space.derived_entries()) {
        out << "mode = finite-matrix\n";
        out << "coords =";
        for (Point p : space.points()) out << ' ' << format_number(space.label(p));
        out << "\n";
    } else {
        out << "mode = finite-matrix\n";
        out << "points =";
        for (Point p : space.points()) out << ' ' << format_number(space.label(p));
        out << "\n";
        out << "matrix =";
        for (int i = 0; i < space.size(); ++i) {
            if (i > 0) out << " ;";
            for (int j = 0; j < space.size(); ++j)
                out << ' ' << format_number(space.distance(Point{i}, Point{j}));
        }
        out << "\n";
    }

    auto render_map = [&](const char* name, const MultiMap& m) {
        out << "\n[" << name << "]\n";
        for (Point p : space.points()) {
            out << format_number(space.label(p)) << " ->";
            for (Point q : m.image(p).members()) out << ' ' << format_number(space.label(q));
            out << "\n";
        }
    };
    render_map("map S", problem.s);
    render_map("map T", problem.t);

    const ContractionDesc& desc = problem.contraction;
    out << "\n[contraction]\n";
    switch (desc.kind) {
        case ContractionKindId::AlphaConst:
            out << "kind = alpha-const\n";
            out << "alpha = " << format_number(desc.alpha) << "\n";
            break;
        case ContractionKindId::AlphaFromGap:
            out << "kind = alpha-from-gap\n";
            out << "gap = ";
            switch (desc.gap_family) {
                case GapFamilyId::HalfDistance: out << "half-distance"; break;
                case GapFamilyId::ScaledDistance:
                    out << "scaled-distance " << format_number(desc.gap_param);
                    break;
                case GapFamilyId::Constant:
                    out << "constant " << format_number(desc.gap_param);
                    break;
            }
            out << "\n";
            break;
        case ContractionKindId::PhiLinear:
            out << "kind = phi-linear\n";
            out << "c = " << format_number(desc.phi_c) << "\n";
            break;
        case ContractionKindId::PhiRational:
            out << "kind = phi-rational\n";
            break;
    }
    out << "alpha_usc = " << (desc.alpha_usc ? "true" : "false") << "\n";
    out << "phi_usc = " << (desc.phi_usc ? "true" : "false") << "\n";
    return out.str();
}

ContractionSpec make_contraction_spec(const ContractionDesc& desc, const MetricSpace& space,
                                      const MultiMap& s, const MultiMap& t) {
    ContractionSpec spec;
    spec.alpha_usc = desc.alpha_usc;
    spec.phi_usc = desc.phi_usc;
    switch (desc.kind) {
        case ContractionKindId::AlphaConst:
            spec.kind = CertificateKind::ConstantAlpha;
            spec.alpha = AlphaOracle::constant(desc.alpha);
            break;
        case ContractionKindId::AlphaFromGap: {
            spec.kind = CertificateKind::WeaklyContractive;
            switch (desc.gap_family) {
                case GapFamilyId::HalfDistance:
                    spec.gap = GapOracle::half_distance(space);
                    break;
                case GapFamilyId::ScaledDistance:
                    if (!(desc.gap_param > 0.0 && desc.gap_param < 1.0))
                        throw CertificateError("gap scale " + format_number(desc.gap_param) +
                                               " is outside (0, 1)");
                    spec.gap = GapOracle::scaled_distance(space, desc.gap_param);
                    break;
                case GapFamilyId::Constant:
                    if (!(desc.gap_param > 0.0))
                        throw CertificateError("constant gap " + format_number(desc.gap_param) +
                                               " must be positive");
                    spec.gap = GapOracle::constant(desc.gap_param);
                    break;
            }
            break;
        }
        case ContractionKindId::PhiLinear:
            spec.kind = CertificateKind::PhiDuality;
            spec.phi = Gauge::linear(desc.phi_c);
            break;
        case ContractionKindId::PhiRational:
            spec.kind = CertificateKind::PhiDuality;
            spec.phi = Gauge::rational();
            break;
    }
    (void)s;
    (void)t;
    return spec;
}

} // namespace mvfp
