#pragma once

#include <sstream>
#include <string>
#include <vector>

namespace kgf {

enum class ViolationKind {
    MissingSquare,        // composable mixed 2-path without a table entry
    NonInvolutiveSquare,  // table(table(q)) != q, or duplicate normal forms at length 2
    SourceRangeMismatch,  // entry whose image breaks source/range/degree preservation
    CubeMismatch,         // the two routes of the associativity check disagree
    DanglingEdge,         // table entry that is not a composable mixed 2-path of the skeleton
};

inline const char* to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::MissingSquare: return "MissingSquare";
        case ViolationKind::NonInvolutiveSquare: return "NonInvolutiveSquare";
        case ViolationKind::SourceRangeMismatch: return "SourceRangeMismatch";
        case ViolationKind::CubeMismatch: return "CubeMismatch";
        case ViolationKind::DanglingEdge: return "DanglingEdge";
    }
    return "?";
}

struct Violation {
    ViolationKind kind;
    std::vector<std::vector<std::string>> witness;  // offending paths, traversal order
    std::string detail;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;

    void add(ViolationKind kind, std::vector<std::vector<std::string>> witness,
             std::string detail) {
        ok = false;
        violations.push_back(Violation{kind, std::move(witness), std::move(detail)});
    }

    bool has(ViolationKind kind) const {
        for (const auto& v : violations) {
            if (v.kind == kind) {
                return true;
            }
        }
        return false;
    }
};

inline std::string to_text(const ValidationReport& report) {
    if (report.ok) {
        return "ok\n";
    }
    std::ostringstream os;
    for (const auto& v : report.violations) {
        os << to_string(v.kind);
        for (const auto& path : v.witness) {
            os << " [";
            for (std::size_t i = 0; i < path.size(); ++i) {
                os << (i ? " " : "") << path[i];
            }
            os << "]";
        }
        if (!v.detail.empty()) {
            os << ": " << v.detail;
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace kgf
