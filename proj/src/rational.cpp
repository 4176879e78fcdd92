#include "dimerforge/rational.hpp"

#include "dimerforge/errors.hpp"

namespace dimerforge {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::EmbeddingError: return "EmbeddingError";
        case ErrorKind::NotSimple: return "NotSimple";
        case ErrorKind::Disconnected: return "Disconnected";
        case ErrorKind::DualNotSimple: return "DualNotSimple";
        case ErrorKind::NotOnInfiniteFace: return "NotOnInfiniteFace";
        case ErrorKind::BadDegree: return "BadDegree";
        case ErrorKind::NotAPath: return "NotAPath";
        case ErrorKind::NotSymmetric: return "NotSymmetric";
        case ErrorKind::WeightMismatch: return "WeightMismatch";
        case ErrorKind::PreconditionViolated: return "PreconditionViolated";
        case ErrorKind::ReembeddingFailed: return "ReembeddingFailed";
        case ErrorKind::NotDegreeTwo: return "NotDegreeTwo";
        case ErrorKind::SharedFace: return "SharedFace";
        case ErrorKind::NotAPeak: return "NotAPeak";
        case ErrorKind::BelowDiagonal: return "BelowDiagonal";
        case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
        case ErrorKind::CycleDetected: return "CycleDetected";
        case ErrorKind::NotAlternating: return "NotAlternating";
        case ErrorKind::RootNotOnInfiniteFace: return "RootNotOnInfiniteFace";
        case ErrorKind::ConstraintPathMismatch: return "ConstraintPathMismatch";
        case ErrorKind::ConditionViolated: return "ConditionViolated";
        case ErrorKind::NotOnAxis: return "NotOnAxis";
        case ErrorKind::NotBanded: return "NotBanded";
        case ErrorKind::ClassificationFailed: return "ClassificationFailed";
        case ErrorKind::BandPairingViolated: return "BandPairingViolated";
        case ErrorKind::ChannelPairingViolated: return "ChannelPairingViolated";
        case ErrorKind::HypothesisViolated: return "HypothesisViolated";
        case ErrorKind::LiftFailed: return "LiftFailed";
        case ErrorKind::NotACycle: return "NotACycle";
        case ErrorKind::ConfigError: return "ConfigError";
        case ErrorKind::GenerationExhausted: return "GenerationExhausted";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Error";
}

Rational parse_rational(std::string_view text) {
    auto digits = [](std::string_view s, bool allow_sign) {
        if (s.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && s[0] == '-') i = 1;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!digits(num, true) || !digits(den, false))
        throw Error(ErrorKind::ParseError, "bad rational '" + std::string(text) + "'");
    mpz_class p{std::string(num)}, q{std::string(den)};
    if (q == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string format_rational(const Rational& value) {
    Rational r(value);
    r.canonicalize();
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

int orientation(const Point& a, const Point& b, const Point& c) {
    Rational cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return sgn(cross);
}

bool on_segment(const Point& a, const Point& b, const Point& p) {
    if (orientation(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
           p.y <= std::max(a.y, b.y);
}

bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
    int o1 = orientation(a, b, c), o2 = orientation(a, b, d);
    int o3 = orientation(c, d, a), o4 = orientation(c, d, b);
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    return on_segment(a, b, c) || on_segment(a, b, d) || on_segment(c, d, a) || on_segment(c, d, b);
}

}  // namespace dimerforge
