#include <doctest.h>

#include <dnacodec/channel.hpp>
#include <dnacodec/verify.hpp>

using namespace dnacodec;

TEST_CASE("deletion ball of a homopolymer") {
    CHECK(ball({0, 0, 0}, BallKind::Deletion) == std::vector<Word>({{0, 0}}));
}

TEST_CASE("ball size identities") {
    verify::detail::for_each_word(4, 3, [&](const Word& x) {
        std::size_t runs = 0;
        for (std::size_t i = 0; i < x.size(); ++i) runs += i == 0 || x[i] != x[i - 1];
        CHECK(ball(x, BallKind::Deletion).size() == runs);
        CHECK(ball(x, BallKind::Insertion).size() == 3 * (x.size() + 1) + 1);
        CHECK(ball(x, BallKind::Substitution).size() == 3 * x.size() + 1);
    });
    // the edit ball glues all three together
    Word x{0, 1, 2};
    auto edit = ball(x, BallKind::Edit);
    for (BallKind k : {BallKind::Deletion, BallKind::Insertion, BallKind::Substitution})
        for (const Word& y : ball(x, k))
            CHECK(std::binary_search(edit.begin(), edit.end(), y));
}

TEST_CASE("substitution ball contains the word itself") {
    Word x{1, 2};
    auto b = ball(x, BallKind::Substitution);
    CHECK(std::binary_search(b.begin(), b.end(), x));
}

TEST_CASE("inject") {
    CHECK(inject({0, 2, 0, 3, 1, 3}, {ErrorKind::Deletion, 3}) == Word({0, 2, 3, 1, 3}));
    CHECK(inject({0, 1}, {ErrorKind::Insertion, 3, 2}) == Word({0, 1, 2}));
    CHECK(inject({0, 1}, {ErrorKind::Substitution, 2, 3}) == Word({0, 3}));
    CHECK_THROWS_AS(inject({0, 1}, {ErrorKind::Substitution, 2, 1}), Error);
    CHECK_THROWS_AS(inject({0, 1}, {ErrorKind::Deletion, 3}), Error);
    CHECK_THROWS_AS(inject({0, 1}, {ErrorKind::Insertion, 1, 7}), Error);
}

TEST_CASE("seeded injection is deterministic and reproducible") {
    Word x{0, 1, 2, 3, 0, 1, 2, 3};
    std::mt19937_64 a(99), b(99);
    auto ra = inject_random(x, BallKind::Edit, a);
    auto rb = inject_random(x, BallKind::Edit, b);
    CHECK(ra.first == rb.first);
    CHECK(inject(x, ra.second) == ra.first);

    std::mt19937_64 c(100);
    for (int i = 0; i < 300; ++i) {
        auto [y, spec] = inject_random(x, BallKind::Indel, c);
        CHECK(inject(x, spec) == y);
        CHECK((y.size() == x.size() + 1 || y.size() == x.size() - 1));
    }
}

TEST_CASE("channel suite") {
    for (const auto& check : verify::suite_channel({})) {
        INFO(check.name, ": ", check.detail);
        CHECK(check.pass);
    }
}
