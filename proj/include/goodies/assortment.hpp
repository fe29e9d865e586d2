#pragma once

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace goodies {

// Initial stock vector (n_1, ..., n_K): one entry per goodie type.
// Entry order matters to the simulator and to the joint first-emptying
// distribution; all expectation values are permutation symmetric.
struct Assortment {
    std::vector<int> stocks;

    Assortment() = default;
    explicit Assortment(std::vector<int> s) : stocks(std::move(s)) {
        if (stocks.empty()) throw std::domain_error("assortment needs at least one type");
        for (int v : stocks)
            if (v < 0) throw std::domain_error("negative stock");
    }

    int k() const { return static_cast<int>(stocks.size()); }

    long total() const { return std::accumulate(stocks.begin(), stocks.end(), 0L); }

    // indices of types with positive stock, in entry order
    std::vector<int> support() const {
        std::vector<int> s;
        for (int i = 0; i < k(); ++i)
            if (stocks[i] > 0) s.push_back(i);
        return s;
    }

    int support_size() const {
        return static_cast<int>(std::count_if(stocks.begin(), stocks.end(),
                                              [](int v) { return v > 0; }));
    }

    bool all_positive() const {
        return std::all_of(stocks.begin(), stocks.end(), [](int v) { return v > 0; });
    }

    int min_stock() const { return *std::min_element(stocks.begin(), stocks.end()); }
    int max_stock() const { return *std::max_element(stocks.begin(), stocks.end()); }

    // entries sorted nonincreasing; canonical representative of the
    // permutation orbit, used as the memo key by the exact engine
    std::vector<int> canonical() const {
        std::vector<int> c = stocks;
        std::sort(c.begin(), c.end(), std::greater<int>());
        return c;
    }

    std::string to_string() const {
        std::ostringstream os;
        for (int i = 0; i < k(); ++i) {
            if (i) os << ',';
            os << stocks[i];
        }
        return os.str();
    }
};

// Parses "3,4,2" into an Assortment. Throws std::domain_error on anything
// that is not a comma-separated list of nonnegative integers.
inline Assortment parse_assortment(const std::string& text) {
    std::vector<int> stocks;
    std::string cell;
    std::istringstream is(text);
    while (std::getline(is, cell, ',')) {
        size_t pos = 0;
        int v;
        try {
            v = std::stoi(cell, &pos);
        } catch (const std::exception&) {
            throw std::domain_error("bad assortment entry: '" + cell + "'");
        }
        if (pos != cell.size() || v < 0)
            throw std::domain_error("bad assortment entry: '" + cell + "'");
        stocks.push_back(v);
    }
    if (stocks.empty()) throw std::domain_error("empty assortment string");
    return Assortment(std::move(stocks));
}

}  // namespace goodies
