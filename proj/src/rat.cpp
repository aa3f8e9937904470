#include "hgmono/rat.hpp"

namespace hgmono {

std::string format_rat(const Rat& r) {
    Int n = rat_num(r);
    Int d = rat_den(r);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

Rat parse_rat(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational");
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && i == 0);
        if (!ok) throw ParseError("bad rational: " + text);
    }
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den <= 0) throw ParseError("nonpositive denominator: " + text);
        return Rat(num, den);
    } catch (const std::exception&) {
        throw ParseError("bad rational: " + text);
    }
}

}  // namespace hgmono
