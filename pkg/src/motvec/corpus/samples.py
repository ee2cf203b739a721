"""Built-in sample texts for the default language profiles.

General-domain paragraphs, enough to seed usable rank profiles for the
extract pipeline out of the box.  Callers with better samples should build
their own profiles from files.
"""

FRENCH_SAMPLE = """
Le matin, la ville se réveille lentement sous un ciel encore gris. Les
boulangeries ouvrent leurs portes et l'odeur du pain chaud se répand dans
les rues étroites. Les habitants se croisent, se saluent, échangent
quelques mots sur le temps qu'il fait et sur les nouvelles du quartier.
Un peu plus loin, le marché s'installe : les maraîchers disposent leurs
légumes, les poissonniers crient les prix du jour, et les clients les plus
matinaux remplissent déjà leurs paniers de fruits, de fromages et de
fleurs fraîches.

La langue française est parlée sur plusieurs continents. Elle évolue sans
cesse, emprunte des mots, en invente d'autres, et chaque région lui donne
un accent et des expressions qui lui sont propres. Dans les écoles, les
enfants apprennent à lire et à écrire, découvrent la grammaire et ses
exceptions, récitent des poèmes et racontent des histoires. Les
bibliothèques conservent des milliers de livres anciens et modernes, des
romans, des essais, des pièces de théâtre et des recueils de poésie que
les lecteurs feuillettent pendant les après-midi tranquilles.

Quand vient le soir, les terrasses des cafés se remplissent. On y discute
de tout : du travail, des vacances, du dernier film sorti au cinéma, des
résultats du match de la veille. Le serveur apporte les boissons, note les
commandes et plaisante avec les habitués. La nuit tombe doucement sur les
toits, les lampadaires s'allument un à un, et la ville change de visage
sans jamais vraiment s'endormir. Demain, tout recommencera, presque pareil
et pourtant différent, comme chaque jour depuis toujours.

Pendant l'été, les familles partent vers la mer ou la montagne. Les
enfants construisent des châteaux de sable, apprennent à nager dans les
vagues, ramassent des coquillages au bord de l'eau. Les parents lisent à
l'ombre des parasols, préparent des pique-niques, surveillent du coin de
l'œil les jeux des plus petits. Sur les sentiers de randonnée, les
marcheurs admirent les paysages, traversent des forêts de sapins,
s'arrêtent près des torrents pour reprendre leur souffle et boire un peu
d'eau fraîche avant de repartir vers le sommet.

La cuisine tient une place importante dans la vie quotidienne. Chaque
région possède ses spécialités : les crêpes en Bretagne, la choucroute en
Alsace, la bouillabaisse à Marseille, le cassoulet à Toulouse. Les
marchés regorgent de produits frais, les fromagers proposent des dizaines
de variétés, et les pâtissiers rivalisent d'imagination pour créer des
desserts qui attirent les gourmands devant leurs vitrines. Le dimanche,
on prend le temps de cuisiner un vrai repas, une volaille rôtie, des
légumes du jardin, une tarte aux pommes encore tiède.

Il faut aussi parler des saisons. Au printemps, les arbres bourgeonnent et
les jardins se couvrent de fleurs. En été, la chaleur pousse chacun vers
les fontaines et les berges ombragées des rivières. En automne, les
feuilles rougissent puis tombent, les vendanges occupent les campagnes, et
les premiers feux de cheminée parfument les maisons. En hiver, la neige
recouvre parfois les toits, les enfants espèrent qu'elle tiendra jusqu'au
matin, et les passants pressent le pas pour retrouver la chaleur de leur
logement où les attend une soupe fumante.
"""

ENGLISH_SAMPLE = """
In the morning the town wakes slowly under a sky that is still gray. The
bakeries open their doors and the smell of warm bread drifts through the
narrow streets. Neighbors pass one another, say hello, and trade a few
words about the weather and the news of the day. A little further on, the
market is setting up: growers arrange their vegetables, fishmongers call
out the day's prices, and the earliest customers are already filling their
baskets with fruit, cheese, and fresh flowers.

The English language is spoken on every continent. It changes constantly,
borrows words, invents new ones, and every region gives it an accent and
turns of phrase of its own. In the schools, children learn to read and
write, discover grammar and its exceptions, recite poems, and tell
stories. The libraries keep thousands of books old and new: novels,
essays, plays, and collections of poetry that readers browse through on
quiet afternoons when the rain keeps everyone indoors.

When evening comes, the cafe terraces fill up. People talk about
everything: work, holidays, the latest film at the cinema, the result of
yesterday's match. The waiter brings the drinks, writes down the orders,
and jokes with the regulars. Night falls gently over the rooftops, the
street lamps come on one by one, and the town changes its face without
ever quite going to sleep. Tomorrow it will all begin again, almost the
same and yet different, as it has every day for as long as anyone can
remember.

During the summer, families head for the sea or the mountains. Children
build sandcastles, learn to swim in the waves, and gather shells at the
water's edge. Parents read in the shade of the umbrellas, prepare picnics,
and keep an eye on the younger ones at play. On the hiking trails, walkers
admire the scenery, cross forests of pine, and stop beside the streams to
catch their breath and drink a little cold water before setting off again
toward the summit that waits above the clouds.

Cooking holds an important place in everyday life. Every region has its
own specialties, and the markets overflow with fresh produce. The cheese
sellers offer dozens of varieties, and the bakers compete with one another
to invent desserts that draw a crowd to their windows. On Sundays people
take the time to cook a proper meal: a roast chicken, vegetables from the
garden, an apple pie still warm from the oven, and perhaps a pot of coffee
shared around the table while the afternoon slips away.

Something should be said about the seasons as well. In spring the trees
come into bud and the gardens fill with flowers. In summer the heat drives
everyone toward the fountains and the shaded banks of the rivers. In
autumn the leaves turn red and fall, the harvest keeps the countryside
busy, and the first fires scent the houses. In winter the snow sometimes
covers the rooftops, the children hope it will last until morning, and
passers-by quicken their step to reach the warmth of home where a bowl of
hot soup is waiting on the stove.
"""

DEFAULT_SAMPLES = {"fr": FRENCH_SAMPLE, "en": ENGLISH_SAMPLE}
