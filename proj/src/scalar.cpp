#include "gdz/scalar.hpp"

#include <cctype>

namespace gdz {

namespace {

std::string rat_to_string(const mpq_class& q) {
    return q.get_str(); // canonical "p" or "p/q"
}

bool valid_rational_text(const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = 0;
    if (t[i] == '+' || t[i] == '-') ++i;
    bool digits = false, slash = false, digits_after = false;
    for (; i < t.size(); ++i) {
        char c = t[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            (slash ? digits_after : digits) = true;
        } else if (c == '/' && !slash && digits) {
            slash = true;
        } else {
            return false;
        }
    }
    return digits && (!slash || digits_after);
}

mpq_class parse_rat(const std::string& t) {
    if (!valid_rational_text(t)) throw ParseError("bad rational '" + t + "'");
    std::string body = (t[0] == '+') ? t.substr(1) : t;
    mpq_class q;
    if (q.set_str(body, 10) != 0) throw ParseError("bad rational '" + t + "'");
    if (sgn(q.get_den()) == 0) throw ParseError("zero denominator in '" + t + "'");
    q.canonicalize();
    return q;
}

} // namespace

std::string to_string(const ExactScalar& s) {
    bool has_re = sgn(s.re) != 0;
    bool has_im = sgn(s.im) != 0;
    if (!has_re && !has_im) return "0";
    std::string out;
    if (has_re) out += rat_to_string(s.re);
    if (has_im) {
        std::string im = rat_to_string(s.im);
        if (has_re && im[0] != '-') out += '+';
        out += im;
        out += 'i';
    }
    return out;
}

ExactScalar parse_rational(const std::string& text) {
    return ExactScalar(parse_rat(text));
}

ExactScalar parse_exact_scalar(const std::string& text) {
    if (text.empty()) throw ParseError("empty scalar");
    std::string t = text;
    bool has_im = t.back() == 'i';

    if (!has_im) return ExactScalar(parse_rat(t));

    t.pop_back(); // strip 'i'
    // Split "re±im" at the last sign that starts the imaginary part.
    // Signs inside a part only occur at its front, so any '+'/'-' past
    // position 0 is the separator.
    std::size_t split = std::string::npos;
    for (std::size_t i = t.size(); i-- > 1;) {
        if (t[i] == '+' || t[i] == '-') {
            split = i;
            break;
        }
    }
    std::string re_part, im_part;
    if (split == std::string::npos) {
        im_part = t;
    } else {
        re_part = t.substr(0, split);
        im_part = t.substr(split);
    }
    if (im_part.empty() || im_part == "+") im_part = "1";
    else if (im_part == "-") im_part = "-1";

    mpq_class re = re_part.empty() ? mpq_class(0) : parse_rat(re_part);
    mpq_class im = parse_rat(im_part);
    return ExactScalar(re, im);
}

} // namespace gdz
