#include "knotsig/braid.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace knotsig {

namespace {

[[noreturn]] void parseFail(size_t pos, const std::string& msg) {
    throw std::invalid_argument("braid parse error at position " + std::to_string(pos) + ": " + msg);
}

}  // namespace

BraidWord parseBraid(const std::string& text, int strands) {
    if (strands < 2) throw std::invalid_argument("braid needs at least 2 strands");
    BraidWord w;
    w.strands = strands;
    size_t i = 0;
    auto skipWs = [&] {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
            ++i;
    };
    auto readInt = [&]() -> long {
        size_t start = i;
        bool neg = false;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) neg = text[i++] == '-';
        size_t digits = i;
        long v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            v = v * 10 + (text[i++] - '0');
        if (i == digits) parseFail(start, "expected an integer");
        return neg ? -v : v;
    };
    auto checkIndex = [&](long idx, size_t pos) {
        if (idx < 1 || idx >= strands)
            parseFail(pos, "generator index out of range 1.." + std::to_string(strands - 1));
    };
    skipWs();
    if (i < text.size() && text[i] == '[') {
        ++i;
        skipWs();
        while (i < text.size() && text[i] != ']') {
            size_t pos = i;
            long v = readInt();
            if (v == 0) parseFail(pos, "generator index 0 is invalid");
            checkIndex(std::abs(v), pos);
            w.letters.push_back(BraidLetter::sigma(static_cast<int>(std::abs(v)), v > 0 ? 1 : -1));
            skipWs();
        }
        if (i == text.size()) parseFail(i, "unterminated '['");
        ++i;
        skipWs();
        if (i != text.size()) parseFail(i, "trailing input after ']'");
        return w;
    }
    while (skipWs(), i < text.size()) {
        size_t pos = i;
        char c = text[i];
        if (c == 's' || c == 'S') {
            ++i;
            long idx = readInt();
            checkIndex(idx, pos);
            int sign = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                long e = readInt();
                if (e == 1) sign = 1;
                else if (e == -1) sign = -1;
                else parseFail(pos, "only exponents ^1 and ^-1 are supported");
            }
            w.letters.push_back(BraidLetter::sigma(static_cast<int>(idx), sign));
        } else if (c == 'b' || c == 'B') {
            ++i;
            if (i >= text.size() || text[i] != '(') parseFail(i, "expected '(' after 'b'");
            ++i;
            long a = readInt();
            skipWs();
            long b = readInt();
            skipWs();
            if (i >= text.size() || text[i] != ')') parseFail(i, "expected ')'");
            ++i;
            if (a < 1 || b <= a || b > strands)
                parseFail(pos, "band needs 1 <= i < j <= strands");
            w.letters.push_back(BraidLetter::band(static_cast<int>(a), static_cast<int>(b)));
        } else {
            parseFail(i, std::string("unexpected character '") + c + "'");
        }
    }
    if (w.letters.empty() && text.find_first_not_of(" \t\r\n") == std::string::npos)
        return w;  // empty word is the identity braid
    return w;
}

std::vector<BraidLetter> expandToStandard(const BraidWord& w) {
    std::vector<BraidLetter> out;
    for (const auto& l : w.letters) {
        if (l.kind == BraidLetter::Kind::Sigma) {
            out.push_back(l);
            continue;
        }
        // (s_i ... s_{j-2}) s_{j-1} (s_i ... s_{j-2})^{-1}
        for (int k = l.i; k <= l.j - 2; ++k) out.push_back(BraidLetter::sigma(k, 1));
        out.push_back(BraidLetter::sigma(l.j - 1, 1));
        for (int k = l.j - 2; k >= l.i; --k) out.push_back(BraidLetter::sigma(k, -1));
    }
    return out;
}

int closureComponents(const BraidWord& w) {
    std::vector<int> perm(w.strands);
    std::iota(perm.begin(), perm.end(), 0);
    for (const auto& l : w.letters) {
        if (l.kind == BraidLetter::Kind::Sigma) std::swap(perm[l.i - 1], perm[l.i]);
        else std::swap(perm[l.i - 1], perm[l.j - 1]);
    }
    std::vector<bool> seen(w.strands, false);
    int cycles = 0;
    for (int s = 0; s < w.strands; ++s) {
        if (seen[s]) continue;
        ++cycles;
        for (int t = s; !seen[t]; t = perm[t]) seen[t] = true;
    }
    return cycles;
}

BennequinData bennequinSurfaceData(const BraidWord& w) {
    for (const auto& l : w.letters)
        if (l.kind != BraidLetter::Kind::Band)
            throw std::invalid_argument("Bennequin surface needs an all-band word");
    BennequinData out;
    out.euler = w.strands - static_cast<int>(w.letters.size());
    out.components = closureComponents(w);
    int twice = out.components - out.euler;
    if (twice % 2 != 0) throw std::logic_error("parity violation in surface data");
    out.bigGenus = twice / 2;
    out.genus = out.bigGenus - (out.components - 1);
    return out;
}

SeifertMatrix braidSeifertMatrix(const BraidWord& w) {
    std::vector<BraidLetter> word = expandToStandard(w);
    const int s = w.strands;
    // occurrence positions per strand pair
    std::vector<std::vector<int>> occ(s - 1);
    std::vector<int> signAt(word.size());
    for (size_t pos = 0; pos < word.size(); ++pos) {
        occ[word[pos].i - 1].push_back(static_cast<int>(pos));
        signAt[pos] = word[pos].sign;
    }
    for (int i = 0; i < s - 1; ++i)
        if (occ[i].empty()) {
            std::ostringstream os;
            os << "disconnected closure: no crossing joins strands " << (i + 1) << " and "
               << (i + 2);
            throw std::invalid_argument(os.str());
        }
    struct Loop {
        int pair;     // strand pair index (0-based)
        int a, b;     // word positions of its two crossings, a < b
        int ea, eb;   // crossing signs
    };
    std::vector<Loop> loops;
    for (int i = 0; i < s - 1; ++i)
        for (size_t k = 0; k + 1 < occ[i].size(); ++k)
            loops.push_back({i, occ[i][k], occ[i][k + 1], signAt[occ[i][k]], signAt[occ[i][k + 1]]});
    const int n = static_cast<int>(loops.size());
    SeifertMatrix out;
    out.entries.assign(n, std::vector<Int>(n, Int(0)));
    out.components = closureComponents(w);
    out.name = "braid closure";
    for (int x = 0; x < n; ++x) {
        const Loop& lx = loops[x];
        out.entries[x][x] = -(lx.ea + lx.eb) / 2;
        for (int y = 0; y < n; ++y) {
            if (x == y) continue;
            const Loop& ly = loops[y];
            if (lx.pair == ly.pair) {
                // consecutive loops share a crossing; its sign picks the side
                if (lx.b == ly.a)
                    out.entries[x][y] = lx.eb > 0 ? 1 : 0;
                else if (ly.b == lx.a)
                    out.entries[x][y] = ly.eb > 0 ? 0 : -1;
                continue;
            }
            if (ly.pair == lx.pair + 1) {
                // interleaved loops on adjacent strand pairs: the lower-pair
                // loop carries the linking, signed by which loop starts first;
                // nested or disjoint spans do not link (checked against the
                // Burau route over all short words)
                if (lx.a < ly.a && ly.a < lx.b && lx.b < ly.b)
                    out.entries[x][y] = -1;
                else if (ly.a < lx.a && lx.a < ly.b && ly.b < lx.b)
                    out.entries[x][y] = 1;
            }
        }
    }
    return out;
}

}  // namespace knotsig
