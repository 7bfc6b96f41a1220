#include <stdio.h>
#include <string.h>

#include "abelian_rle.h"

#define CHECK(cond)                                              \
    do {                                                         \
        if (!(cond)) {                                           \
            fprintf(stderr, "line %d: %s\n", __LINE__, #cond);   \
            return 1;                                            \
        }                                                        \
    } while (0)

int main(void) {
    AbrText *text = NULL;
    CHECK(abr_text_from_rle_tokens("a:12 b:4 a:3 c:2 d:2 c:2 a:2", &text) == ABR_STATUS_OK);
    CHECK(abr_text_len(text) == 27);
    CHECK(abr_text_runs(text) == 7);

    AbrSquares *sq = NULL;
    CHECK(abr_squares(text, 4, &sq) == ABR_STATUS_OK);
    CHECK(abr_squares_len(sq) == 3);
    AbrSquareRun run;
    CHECK(abr_squares_get(sq, 0, &run) == ABR_STATUS_OK);
    CHECK(run.first_start == 1 && run.last_start == 5 && run.half_len == 4);
    CHECK(abr_squares_get(sq, 3, &run) == ABR_STATUS_OUT_OF_RANGE);
    abr_squares_free(sq);

    CHECK(abr_squares(text, 14, &sq) == ABR_STATUS_OUT_OF_RANGE);
    CHECK(abr_last_error_message() != NULL);
    abr_text_free(text);

    CHECK(abr_text_from_rle_tokens("a:2 b:2 a:3 b:1 a:1 b:1 a:4 b:2 a:1", &text) == ABR_STATUS_OK);
    AbrPeriods *per = NULL;
    CHECK(abr_periods(text, &per) == ABR_STATUS_OK);
    int seen = 0;
    for (size_t i = 0; i < abr_periods_len(per); i++) {
        AbrPeriod p;
        CHECK(abr_periods_get(per, i, &p) == ABR_STATUS_OK);
        if (p.p == 3 && p.t == 2) seen = 1;
    }
    CHECK(seen);
    abr_periods_free(per);
    abr_text_free(text);

    AbrLcaf *l = NULL;
    CHECK(abr_lcaf("aaaaacbbbcc", "cccaaccbbbb", &l) == ABR_STATUS_OK);
    CHECK(abr_lcaf_length(l) == 8);
    CHECK(abr_lcaf_pair_count(l) == 1);
    AbrPair pair;
    CHECK(abr_lcaf_pair_get(l, 0, &pair) == ABR_STATUS_OK);
    CHECK(pair.i == 4 && pair.k == 3);
    abr_lcaf_free(l);

    CHECK(abr_text_from_rle_tokens("a:0", &text) == ABR_STATUS_MALFORMED_INPUT);
    CHECK(strlen(abr_status_str(ABR_STATUS_MALFORMED_INPUT)) > 0);
    puts("ok");
    return 0;
}
