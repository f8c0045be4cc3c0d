#pragma once

#include "mvfp/contraction.hpp"
#include "mvfp/metric.hpp"
#include "mvfp/multimap.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mvfp {

// Parameter-level description of the declared certificate, kept separate
// from ContractionSpec (which holds opaque callables) so problem files
// can round-trip through render/parse by value.
enum class ContractionKindId { AlphaConst, AlphaFromGap, PhiLinear, PhiRational };
enum class GapFamilyId { HalfDistance, ScaledDistance, Constant };

struct ContractionDesc {
    ContractionKindId kind = ContractionKindId::AlphaConst;
    double alpha = 0.0;                            // AlphaConst
    GapFamilyId gap_family = GapFamilyId::HalfDistance; // AlphaFromGap
    double gap_param = 0.0;                        // ScaledDistance / Constant parameter
    double phi_c = 0.0;                            // PhiLinear coefficient
    bool alpha_usc = false;
    bool phi_usc = false;

    friend bool operator==(const ContractionDesc&, const ContractionDesc&) = default;
};

struct ProblemFile {
    MetricSpace space;
    MultiMap s;
    MultiMap t;
    ContractionDesc contraction;

    friend bool operator==(const ProblemFile&, const ProblemFile&) = default;
};

struct ParseIssue {
    int line = 0; // 1-based; 0 when the issue is file-wide
    std::string message;
};

struct ParseResult {
    std::optional<ProblemFile> problem; // set iff issues is empty
    std::vector<ParseIssue> issues;

    bool ok() const { return problem.has_value(); }
};

// Line-oriented `key = value` format with [space], [map S], [map T] and
// [contraction] sections; '#' starts a comment. Map sections accept either
// a named family (identity | halving | shift K | affine P C) or explicit
// `label -> label label ...` lines; families are resolved to explicit
// images at load. All map images are validated against the universe.
// Structural problems are collected with line numbers; contraction
// parameter ranges are NOT enforced here (the certificate layer owns
// them and reports violations as CertificateError).
ParseResult parse_problem(const std::string& text);

// Canonical rendering: coords/grid space shorthand preserved, maps written
// as explicit image lines sorted by label. parse(render(p)) == p.
std::string render_problem(const ProblemFile& problem);

// Builds the runtime certificate from the description. Throws
// CertificateError for out-of-range parameters (alpha or phi coefficient
// outside [0,1), non-positive gap parameter).
ContractionSpec make_contraction_spec(const ContractionDesc& desc, const MetricSpace& space,
                                      const MultiMap& s, const MultiMap& t);

} // namespace mvfp
