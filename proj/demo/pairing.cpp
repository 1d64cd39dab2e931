// Intersection data and cabled pairings of the image of one fork with one noodle.
#include "lawrence/pairing.hpp"

#include <iostream>

int main(int argc, char** argv) {
    using namespace lawrence;
    int n = 3;
    std::string text = argc > 1 ? argv[1] : "-1 2 2 1";
    BraidWord w = parse_word(text, n);
    DiskModel model(n);
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) {
            IntersectionData d = intersection_data(model, w, i, j);
            std::cout << "fork " << i << " noodle " << j << ": l=" << d.size();
            for (int m = 1; m <= 3; ++m) std::cout << "  m=" << m << ": " << pair_cabled(d, m).to_string();
            std::cout << '\n';
        }
}
