# Циклические коды над Z4[u]/<u^k> нечётной длины
