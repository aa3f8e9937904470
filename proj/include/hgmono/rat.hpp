#ifndef HGMONO_RAT_HPP
#define HGMONO_RAT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace hgmono {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct SingularMatrix : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotGaloisClosed : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotCyclotomicProduct : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvariantViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DegenerateForm : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InconsistentSignature : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DefiniteForm : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ZeroCoefficient : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct WordSyntaxError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnknownName : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

// serialization: "p/q" reduced with q > 0, plain "p" when q = 1
std::string format_rat(const Rat& r);
Rat parse_rat(const std::string& text);

}  // namespace hgmono

#endif
