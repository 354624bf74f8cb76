#ifndef PROFSEMI_JSON_IO_HPP
#define PROFSEMI_JSON_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "profsemi/density.hpp"
#include "profsemi/duality.hpp"
#include "profsemi/measure.hpp"
#include "profsemi/monad.hpp"
#include "profsemi/semiring.hpp"
#include "profsemi/space.hpp"

namespace profsemi {

// ordered so that emitted reports keep a stable field order
using ojson = nlohmann::ordered_json;

// parse errors become descriptor_error carrying the byte offset
ojson load_json_file(const std::string& path);
ojson parse_json(const std::string& text, const std::string& origin);

FiniteSemiring semiring_from_json(const ojson& j);
ojson semiring_to_json(const FiniteSemiring& s);

// "semiring" field may be an inline descriptor object or a builtin spec string
FiniteSemimodule semimodule_from_json(const ojson& j);

Space space_from_json(const ojson& j);
ojson space_to_json(const Space& s);

Clopen clopen_from_json(const Space& space, const ojson& j);
ojson clopen_to_json(const Clopen& c);

// {"level": n, "cell": c, "depth"?: d}; the thread is the least extension
Point point_from_json(const Space& space, const ojson& j, int default_depth);

Measure measure_from_json(const Space& space, const FiniteSemiring& s, const ojson& j,
                          int point_depth);

std::vector<SubbasicConstraint> constraints_from_json(const Space& space, const FiniteSemiring& s,
                                                      const ojson& j);

ContinuousMap map_from_json(const Space& source, const ojson& j, int depth);

ojson report_to_json(const ValidationReport& r);
ojson monad_report_to_json(const MonadLawReport& r);
ojson bijection_report_to_json(const BijectionReport& r);
ojson continuity_report_to_json(const ContinuityReport& r);
ojson galois_report_to_json(const GaloisReport& r);
ojson finfn_to_json(const FinFn& f);

}  // namespace profsemi

#endif
