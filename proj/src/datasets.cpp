#include "efm/datasets.hpp"

namespace efm {
namespace datasets {

namespace {

QField rt(long num, long den, long d) { return QField(Rational(0), Rational(num, den), d); }
QField rat(long num, long den = 1) { return QField(Rational(num, den)); }

}  // namespace

CosinePoly poly(const std::string& name) {
    if (name == "quartic-q3")
        return CosinePoly({rat(1), rt(1, 1, 3), rat(7, 6), rt(1, 3, 3), rat(1, 6)});
    if (name == "band-f2")
        return CosinePoly({rat(1, 2) - rt(1, 4, 2), rat(-1, 2) + rt(1, 2, 2), rat(1, 2)});
    if (name == "cubic-q2") return CosinePoly({rat(1), rt(3, 1, 2), rat(0), rt(2, 1, 2)});
    if (name == "quintic-q2")
        return CosinePoly({rat(0), rt(7, 10, 2), rat(0), rt(1, 2, 2), rat(0), rt(1, 5, 2)});
    if (name == "quartic-q4")
        return CosinePoly({rat(-1), rat(-4, 3), rat(7, 9), rat(26, 9), rat(16, 9)});
    if (name == "cos") return CosinePoly({rat(0), rat(1)});
    if (name == "cos12") return CosinePoly({rat(0), rat(1), rat(1)});
    throw InputError("unknown polynomial dataset \"" + name + "\"");
}

ThetaSet theta(const std::string& name) {
    if (name == "full") return ThetaSet::full();
    if (name == "elliptic-q2") return admissible_trace_angles(2);
    if (name == "elliptic-q4") return frobenius_square_pushforward(admissible_trace_angles(2));
    if (name == "band-complement")
        return ThetaSet::complement_of_interval(rat(1, 2), -rt(1, 2, 2));
    if (name == "tail-q2") return ThetaSet({{-rt(1, 2, 2), rat(1)}}, {});
    throw InputError("unknown theta dataset \"" + name + "\"");
}

WeilPoly curve(const std::string& name) {
    if (name == "deligne-lusztig") return WeilPoly(3, {{3, 8}, {0, 7}});
    if (name == "x11") return WeilPoly(4, {{4, 5}, {3, 10}, {0, 11}});
    if (name == "genus3") return WeilPoly(2, {{2, 2}, {-1, 1}});
    throw InputError("unknown curve dataset \"" + name + "\"");
}

std::vector<std::string> poly_names() {
    return {"quartic-q3", "band-f2", "cubic-q2", "quintic-q2", "quartic-q4", "cos", "cos12"};
}

std::vector<std::string> theta_names() {
    return {"full", "elliptic-q2", "elliptic-q4", "band-complement", "tail-q2"};
}

std::vector<std::string> curve_names() { return {"deligne-lusztig", "x11", "genus3"}; }

}  // namespace datasets
}  // namespace efm
