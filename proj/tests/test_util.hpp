#pragma once

#include "inflmatch/error.hpp"
#include "inflmatch/linalg.hpp"

#include <doctest.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include <cmath>
#include <unistd.h>

namespace inflmatch::testing {

// Scratch directory removed on destruction.
class TempDir {
public:
    TempDir() {
        static std::atomic<int> counter{0};
        path_ = std::filesystem::temp_directory_path() /
                ("inflmatch_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        std::filesystem::remove_all(path_);
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::filesystem::path write(const std::string& name, const std::string& content) const {
        const auto p = path_ / name;
        std::ofstream(p, std::ios::binary) << content;
        return p;
    }

private:
    std::filesystem::path path_;
};

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double lo = -1.0,
                            double hi = 1.0) {
    std::uniform_real_distribution<double> dist(lo, hi);
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
    }
    return m;
}

// Distances computed with a plain loop, independent of the library.
inline Matrix naive_distances(const Matrix& points) {
    Matrix d(points.rows(), points.rows());
    for (std::size_t i = 0; i < points.rows(); ++i) {
        for (std::size_t j = 0; j < points.rows(); ++j) {
            double s = 0.0;
            for (std::size_t c = 0; c < points.cols(); ++c) {
                const double diff = points(i, c) - points(j, c);
                s += diff * diff;
            }
            d(i, j) = std::sqrt(s);
        }
    }
    return d;
}

}  // namespace inflmatch::testing

#define CHECK_THROWS_CODE(expr, expected_code)                                      \
    do {                                                                            \
        bool thrown_ = false;                                                       \
        try {                                                                       \
            (void)(expr);                                                           \
        } catch (const ::inflmatch::Error& e_) {                                    \
            thrown_ = true;                                                         \
            CHECK_MESSAGE(e_.code() == (expected_code), e_.what());                 \
        }                                                                           \
        CHECK_MESSAGE(thrown_, "expected inflmatch::Error from " #expr);            \
    } while (0)
