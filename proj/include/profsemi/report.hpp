#ifndef PROFSEMI_REPORT_HPP
#define PROFSEMI_REPORT_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace profsemi {

// Base class for all library errors. Subclasses distinguish the CLI exit
// paths: descriptor_error means malformed input (exit 2), the others are
// domain/usage violations raised by operations called out of contract.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed descriptor or unparsable input.
struct descriptor_error : error {
    using error::error;
};

// An operation asked for a level beyond a value's certified depth.
struct depth_error : error {
    using error::error;
};

// Operands live on different spaces or over different semirings.
struct mismatch_error : error {
    using error::error;
};

// Operation preconditions violated (non-idempotent semiring, x not in base, ...).
struct domain_error : error {
    using error::error;
};

// One violated law (or structural defect) with a witnessing tuple.
// `witness` holds the offending element indices in argument order; `detail`
// is a human-readable rendering of the failed instance.
struct LawViolation {
    std::string kind;   // "structural" | "law"
    std::string law;    // e.g. "mul_identity", "distributivity_left"
    std::vector<int> witness;
    std::string detail;
};

struct ValidationReport {
    std::vector<LawViolation> violations;

    bool pass() const { return violations.empty(); }
    bool structural_ok() const {
        for (const auto& v : violations)
            if (v.kind == "structural") return false;
        return true;
    }
    void fail_structural(std::string law, std::vector<int> witness, std::string detail) {
        violations.push_back({"structural", std::move(law), std::move(witness), std::move(detail)});
    }
    void fail_law(std::string law, std::vector<int> witness, std::string detail) {
        violations.push_back({"law", std::move(law), std::move(witness), std::move(detail)});
    }
};

}  // namespace profsemi

#endif
