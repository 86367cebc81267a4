#include "gcdlab/places.hpp"

#include "gcdlab/primes.hpp"

namespace gcdlab {

Place Place::finite(const Integer& p) {
    if (!is_certified_prime(p)) throw DomainError("place requires a certified prime, got " + p.get_str());
    Place v;
    v.prime_ = p;
    return v;
}

const Integer& Place::prime() const {
    if (!prime_) throw DomainError("archimedean place has no prime");
    return *prime_;
}

std::string Place::to_string() const { return prime_ ? prime_->get_str() : "inf"; }

Place Place::parse(std::string_view text) {
    if (text == "inf" || text == "oo" || text == "infinity") return archimedean();
    Rational q = parse_rational(text);
    if (q.get_den() != 1) throw DomainError("place must be 'inf' or a prime: " + std::string(text));
    return finite(q.get_num());
}

std::strong_ordering operator<=>(const Place& a, const Place& b) {
    if (a.is_archimedean() || b.is_archimedean()) {
        return static_cast<int>(!a.is_archimedean()) <=> static_cast<int>(!b.is_archimedean());
    }
    int c = cmp(a.prime(), b.prime());
    return c <=> 0;
}

PlaceSet::PlaceSet(bool archimedean, std::set<Integer> primes) : archimedean_(archimedean), primes_(std::move(primes)) {
    for (const auto& p : primes_) {
        if (!is_certified_prime(p)) throw DomainError("place set requires primes, got " + p.get_str());
    }
}

PlaceSet PlaceSet::with_archimedean(std::initializer_list<unsigned long> primes) {
    std::set<Integer> ps;
    for (unsigned long p : primes) ps.insert(Integer(p));
    return PlaceSet(true, std::move(ps));
}

PlaceSet PlaceSet::from_places(const std::vector<Place>& places) {
    PlaceSet s;
    for (const auto& v : places) {
        if (v.is_archimedean()) {
            s.archimedean_ = true;
        } else {
            s.primes_.insert(v.prime());
        }
    }
    return s;
}

bool PlaceSet::contains(const Place& v) const {
    return v.is_archimedean() ? archimedean_ : contains_prime(v.prime());
}

PlaceSet PlaceSet::united(const PlaceSet& other) const {
    PlaceSet s = *this;
    s.archimedean_ = archimedean_ || other.archimedean_;
    s.primes_.insert(other.primes_.begin(), other.primes_.end());
    return s;
}

std::vector<Place> PlaceSet::places() const {
    std::vector<Place> out;
    if (archimedean_) out.push_back(Place::archimedean());
    for (const auto& p : primes_) out.push_back(Place::finite(p));
    return out;
}

std::string PlaceSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for (const auto& v : places()) {
        if (!first) out += ",";
        out += v.to_string();
        first = false;
    }
    return out + "}";
}

long valuation(const Integer& x, const Integer& p) {
    if (x == 0) throw DomainError("valuation of zero");
    return multiplicity(x, p);
}

long valuation(const Rational& x, const Integer& p) {
    if (x == 0) throw DomainError("valuation of zero");
    return multiplicity(x.get_num(), p) - multiplicity(x.get_den(), p);
}

LogReal log_abs(const Rational& x, const Place& v) {
    if (x == 0) throw DomainError("log_abs of zero");
    if (v.is_archimedean()) return LogReal::log_of(Rational(abs(x)));
    return LogReal::log_prime(v.prime(), Rational(-valuation(x, v.prime())));
}

std::set<Place> support(const Rational& x) {
    if (x == 0) throw DomainError("support of zero");
    std::set<Place> out;
    if (abs(x) != 1) out.insert(Place::archimedean());
    for (const Integer* part : {&x.get_num(), &x.get_den()}) {
        for (const auto& f : factorize(*part)) {
            if (!f.prime) throw DomainError("support: could not factor " + f.base.get_str());
            out.insert(Place::finite(f.base));
        }
    }
    return out;
}

std::set<Place> joint_support(const std::vector<Rational>& values) {
    std::set<Place> out{Place::archimedean()};
    for (const auto& x : values) {
        if (x == 0) continue;
        auto s = support(x);
        out.insert(s.begin(), s.end());
    }
    return out;
}

}  // namespace gcdlab
